from pycatalyst.cli import cli

"""
Allows running the cli from the module interface e.g.
`python -m pycatalyst ...`
"""
if __name__ == "__main__":
    cli()
