from .utils import initialize_django

__all__ = ("initialize_django",)
