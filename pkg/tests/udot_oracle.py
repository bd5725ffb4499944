"""Independent oracle for the divided-power engine.

Normalizes words of single-step letters over Z using nothing but the
adjacent exchange rule E F = F E + weight (applied at the object the pair
acts on) and deletion of words whose path leaves 0..n. No block merging,
no closed-form swap: every step is one application of the defining
relation, so agreement with the engine is meaningful.

A normal single-step word F^s E^t equals s! t! times the corresponding
divided-power monomial, which gives the conversion used by the tests.
"""

from functools import lru_cache
from math import factorial


def _path_ok(n: int, word: tuple[str, ...], base: int) -> bool:
    obj = base
    if not 0 <= obj <= n:
        return False
    for letter in reversed(word):
        obj = obj + 1 if letter == "F" else obj - 1
        if not 0 <= obj <= n:
            return False
    return True


@lru_cache(maxsize=None)
def normal_words(n: int, word: tuple[str, ...], base: int):
    """FE-normal form over Z as a sorted tuple of ((fcount, ecount), coeff)."""
    if not _path_ok(n, word, base):
        return ()
    pos = next(
        (p for p in range(len(word) - 1) if word[p] == "E" and word[p + 1] == "F"),
        None,
    )
    if pos is None:
        return (((word.count("F"), word.count("E")), 1),)
    obj = base
    for q in range(len(word) - 1, pos + 1, -1):
        obj = obj + 1 if word[q] == "F" else obj - 1
    lam = n - 2 * obj
    out: dict[tuple[int, int], int] = {}
    swapped = word[:pos] + ("F", "E") + word[pos + 2 :]
    for key, c in normal_words(n, swapped, base):
        out[key] = out.get(key, 0) + c
    if lam:
        dropped = word[:pos] + word[pos + 2 :]
        for key, c in normal_words(n, dropped, base):
            out[key] = out.get(key, 0) + lam * c
    return tuple(sorted((k, v) for k, v in out.items() if v))


def oracle_dp_coeffs(n: int, word, base: int) -> dict[tuple[int, int], int]:
    """Divided-power coefficients of a word of single-step letters.

    Keys are (fpow, epow); the word is in writing order with the given
    source object.
    """
    out = {}
    for (fcount, ecount), c in normal_words(n, tuple(word), base):
        out[(fcount, ecount)] = c * factorial(fcount) * factorial(ecount)
    return out


def oracle_block_coeffs(n: int, blocks, base: int) -> dict[tuple[int, int], int]:
    """Same, for a word of divided-power blocks: expand to single steps,
    normalize, divide out the block factorials (always exact)."""
    word = []
    scale = 1
    for letter, p in blocks:
        word.extend([letter] * p)
        scale *= factorial(p)
    raw = oracle_dp_coeffs(n, tuple(word), base)
    out = {}
    for key, c in raw.items():
        if c % scale:
            raise AssertionError(f"non-integral oracle coefficient at {key}")
        if c // scale:
            out[key] = c // scale
    return out
