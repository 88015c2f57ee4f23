from .lvalues import LValueRequest, default_terms, lambda_completed, lvalue, reflection_residual

__all__ = ("LValueRequest", "default_terms", "lambda_completed", "lvalue", "reflection_residual")
