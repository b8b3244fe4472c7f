# liebasis_lib/cli/commands/__init__.py

# One module per command family, each registering its commands on the main app:
# - operators_cmds.py (`liebasis operators ...`)
# - basis_cmds.py (`liebasis basis ...` and the preset variants)
# - kodaira_cmds.py (`liebasis kodaira ...`)
# - census_cmds.py (`liebasis census ...`)
