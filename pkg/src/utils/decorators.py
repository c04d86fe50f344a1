import time
from functools import wraps
from inspect import signature
from typing import Optional

from src.utils.logger import getLogger


def resolve_elements(*param_names: str, monoid_param: Optional[str] = None):
    """Decorator to turn element labels into backend elements.

    Finite monoids name their elements ("0", "1", "inf"); operations accept
    either the element itself or its label. The monoid is the first
    positional parameter unless `monoid_param` names another one.
    """

    def decorator(func):
        sig = signature(func)
        parameters = list(sig.parameters)
        monoid_name = monoid_param or parameters[0]

        @wraps(func)
        def wrapper(*args, **kwargs):
            bound_args = sig.bind(*args, **kwargs)
            bound_args.apply_defaults()
            monoid = bound_args.arguments[monoid_name]
            resolver = getattr(monoid, "element", None)
            if resolver is None:
                return func(*args, **kwargs)

            for param_name in param_names:
                actual_arg = bound_args.arguments.get(param_name)
                if isinstance(actual_arg, str):
                    bound_args.arguments[param_name] = resolver(actual_arg)

            return func(*bound_args.args, **bound_args.kwargs)

        return wrapper

    return decorator


def enforce_type(**type_mapping):
    """Check argument types by parameter name.

    A type given as a string is compared against the class name of the
    argument and its bases, which avoids import cycles between packages.
    """

    def decorator(func):
        sig = signature(func)

        @wraps(func)
        def wrapper(*args, **kwargs):
            bound_args = sig.bind(*args, **kwargs)
            for param_name, expected in type_mapping.items():
                actual_arg = bound_args.arguments.get(param_name)
                if actual_arg is None:
                    continue

                if isinstance(expected, str):
                    names = {cls.__name__ for cls in type(actual_arg).__mro__}
                    ok = expected in names
                    expected_name = expected
                else:
                    ok = isinstance(actual_arg, expected)
                    expected_name = getattr(expected, "__name__", str(expected))
                if not ok:
                    raise TypeError(
                        f"Argument {param_name} expected to be of type {expected_name}, but got {type(actual_arg).__name__}."
                    )

            return func(*args, **kwargs)

        return wrapper

    return decorator


def log_operation(name: Optional[str] = None):
    """Decorator to log an operation with its elapsed time.

    Failures are logged and re-raised.
    """

    def decorator(func):
        label = name or func.__qualname__

        @wraps(func)
        def wrapper(*args, **kwargs):
            logger = getLogger()
            logger.debug(f"---> {label}", func)
            started = time.perf_counter()
            try:
                results = func(*args, **kwargs)
            except Exception as e:
                logger.log(
                    f"{label} failed with error: {e.__class__.__name__}: {e}",
                    func,
                    level="error",
                )
                raise
            elapsed = time.perf_counter() - started
            logger.debug(f"<--- {label} ({elapsed:.3f}s)", func)
            return results

        return wrapper

    return decorator
