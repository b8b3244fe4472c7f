# liebasis_lib/lie/__init__.py

# Lie-theoretic backend: root systems, Chevalley structure constants and
# exact realizations of M(lambda) and V(lambda).
