# liebasis_lib/__init__.py

__version__ = "0.1.0"

# Users import directly from the submodules, e.g.
# from liebasis_lib.lie.rootdata import build_root_system
# from liebasis_lib.bases.essential import compute_basis
