# liebasis_lib/bases/__init__.py

# Monomial orders, birational sequences, the essential-basis engine and the
# truncated-monoid computations built on top of it.
