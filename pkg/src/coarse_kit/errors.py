"""Excepciones del toolkit: cada condicion de error de una operacion publica levanta una de estas."""


class CoarseKitError(Exception):
    pass


class UniverseMismatchError(CoarseKitError, ValueError):
    """Operacion entre objetos anclados a conjuntos base distintos."""


class ChainInvariantError(CoarseKitError, ValueError):
    """Una cadena de escalas no cumple St(B_i,B_i) refina B_{i+1}."""


class SearchCapExceededError(CoarseKitError):
    """La busqueda exhaustiva excede el tope configurado."""


class UnsupportedDimensionError(CoarseKitError, ValueError):
    pass


class MissingValueError(CoarseKitError, KeyError):
    """Falta un valor requerido (p.ej. f(x) de una funcion de radios)."""


class EmptyMemberError(CoarseKitError, ValueError):
    pass


class UnboundedSetError(CoarseKitError, ValueError):
    """Un conjunto que deberia ser acotado tiene diametro infinito."""


class UnknownLawError(CoarseKitError, KeyError):
    pass


class GroupDescriptorError(CoarseKitError, ValueError):
    pass


class WindowError(CoarseKitError, ValueError):
    """Una accion o busqueda sale de la ventana finita."""
