from motivic_density.cli.commands import main

"""
Command-line entry point.

@example
```bash
python -m motivic_density density graphs/e8.graph
```
"""

if __name__ == '__main__':
    main(prog_name='motivic-density')
