from hypothesis import settings

settings.register_profile("slowbox", deadline=None, max_examples=100)
settings.load_profile("slowbox")
