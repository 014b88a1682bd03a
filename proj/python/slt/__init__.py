"""Session-type lightening toolkit: redundant-interaction removal with
trace-preservation checking, plus Scribble rendering."""

try:
    from ._slt import (
        __version__,
        canonical,
        check,
        eliminate_at,
        emit_scribble,
        lang_eq,
        lighten,
        redundant_paths,
        traces,
    )
except ImportError:  # running against a build tree, module next to the package
    from _slt import (
        __version__,
        canonical,
        check,
        eliminate_at,
        emit_scribble,
        lang_eq,
        lighten,
        redundant_paths,
        traces,
    )

__all__ = [
    "__version__",
    "canonical",
    "check",
    "eliminate_at",
    "emit_scribble",
    "lang_eq",
    "lighten",
    "redundant_paths",
    "traces",
]
