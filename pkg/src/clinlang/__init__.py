"""Multilingual clinical language assessment toolkit.

Text, phonological, lexical-semantic, and acoustic measures for clinical
language samples, with batch scoring of spelling, phonological, and naming
tests, exposed through a CLI and a stateless HTTP service.
"""

from .errors import BackendError, InputError, ResourceError, ToolkitError
from .pipeline import analyze_audio, analyze_text, ipa_words
from .report import TOOLKIT_VERSION as __version__
from .textcore import LanguagePack, list_languages, load_language_pack, preprocess

__all__ = [
    "BackendError",
    "InputError",
    "LanguagePack",
    "ResourceError",
    "ToolkitError",
    "__version__",
    "analyze_audio",
    "analyze_text",
    "ipa_words",
    "list_languages",
    "load_language_pack",
    "preprocess",
]
