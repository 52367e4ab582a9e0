from hypothesis import settings

# exact arithmetic only: no flaky deadlines, and derandomized so CI runs are
# byte-for-byte reproducible
settings.register_profile("exact", deadline=None, derandomize=True)
settings.load_profile("exact")
