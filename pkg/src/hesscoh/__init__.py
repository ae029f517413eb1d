"""hesscoh - exact equivariant cohomology of flag, Peterson and Hessenberg varieties."""

__version__ = "0.1.0"
