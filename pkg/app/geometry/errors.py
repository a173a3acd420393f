# app/geometry/errors.py - Errores del dominio geométrico


class GeometryError(ValueError):
    """Precondición geométrica no cumplida (dirección degenerada, lado nulo, etc.)"""
