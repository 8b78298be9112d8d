from .registry_init import initialize_registry

__all__ = ["initialize_registry"]
