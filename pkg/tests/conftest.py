from hypothesis import settings

# reproducible property tests; exact arithmetic makes single examples slow-ish
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")
