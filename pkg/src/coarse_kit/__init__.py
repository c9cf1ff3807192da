"""coarse-kit - Calculo de estructuras de gran escala sobre ventanas finitas."""
__version__ = "1.0.0"
