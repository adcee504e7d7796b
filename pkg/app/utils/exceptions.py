"""
exceptions.py - Jerarquía de errores de qstack

Los fallos de verificación NO son excepciones: se reportan como items
de un Report. Las excepciones cubren entradas mal formadas y usos
inválidos de la API.
"""


class QStackError(Exception):
    """Base de todos los errores del motor"""


# ============================================================================
# ESCALARES
# ============================================================================


class SymbolTableMismatch(QStackError):
    """Dos escalares declarados sobre tablas de símbolos distintas"""


class NotInvertible(QStackError):
    """Sólo los escalares monomiales son invertibles"""

    def __init__(self, value: object):
        super().__init__(f'not invertible in this representation: {value}')
        self.value = value


class MissingSymbol(QStackError):
    """Sustitución sin imagen para un símbolo de exponente"""


# ============================================================================
# ÁLGEBRA
# ============================================================================


class QuiverMismatch(QStackError):
    """Elemento o flecha ajenos al quiver esperado"""


class EndpointMismatch(QStackError):
    """Extremos (head/tail) incompatibles"""


class NonMonomialLeadingTerm(QStackError):
    """No se puede orientar una relación con coeficiente líder no monomial"""


class RuleOrientationError(QStackError):
    """Algún término del lado derecho no es menor que el lado izquierdo"""


class AuxRuleRejected(QStackError):
    """Regla auxiliar de localización que no pasa la validación de pertenencia"""

    def __init__(self, rule: object, residual: object):
        super().__init__(f"auxiliary rule {rule} rejected, residual: {residual}")
        self.rule = rule
        self.residual = residual


class MissingImage(QStackError):
    """Flecha sin imagen en una representación"""


class PresentationMismatch(QStackError):
    """Composición de representaciones sobre presentaciones incompatibles"""


class OverlapMissing(QStackError):
    """La tupla de cartas no tiene intersección declarada"""


class ChartMismatch(QStackError):
    """Vector de módulo sobre una carta distinta a la de la celda"""


# ============================================================================
# DATASETS / CLI
# ============================================================================


class DatasetParseError(QStackError):
    """Error de parseo con localización (sección y línea si se conoce)"""

    def __init__(self, message: str, section: str | None = None, line: int | None = None):
        location = ''
        if section:
            location += f' [section {section}]'
        if line is not None:
            location += f' [line {line}]'
        super().__init__(f'{message}{location}')
        self.message = message
        self.section = section
        self.line = line


class DanglingReference(DatasetParseError):
    """Referencia a un objeto no declarado en el dataset"""


class UnknownCommand(QStackError):
    """Subcomando de CLI desconocido"""
