from motivic_density.cli.commands import main

__all__ = ['main']
