# liebasis_lib/cli/__init__.py

# The Typer application lives in main.py; each command family has its own
# module in the 'commands' subdirectory.
