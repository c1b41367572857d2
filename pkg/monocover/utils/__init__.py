from .dev import progbar, setloglevel, verbosity, Profile, timeit
