"""
Base reader interface and registry.

All graph readers inherit from BaseReader and implement the parse method.
The ReaderRegistry provides automatic reader selection based on file type.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Sequence
from pathlib import Path
from typing import ClassVar

from community_veil.exceptions import GraphFormatError
from community_veil.graph import Graph
from community_veil.models import GraphFormat

logger = logging.getLogger(__name__)


class BaseReader(ABC):
    """
    Abstract base class for graph file readers.

    Each reader handles one format and turns text into a Graph. Non-fatal
    findings (duplicate edges, disconnected input) are collected as warnings.
    """

    # Subclasses must define supported extensions and their format
    supported_extensions: ClassVar[list[str]] = []
    graph_format: ClassVar[GraphFormat]

    def __init__(self) -> None:
        """Initialize the reader."""
        self.warnings: list[str] = []

    @abstractmethod
    def parse(self, text: str, known_labels: Sequence[str] = ()) -> Graph:
        """
        Parse graph text.

        Args:
            text: Full file content
            known_labels: Labels whose node ids must come first, in this order.
                Used to line a deceived graph up with its original.

        Returns:
            Parsed Graph
        """

    @abstractmethod
    def serialize(self, g: Graph) -> str:
        """Render ``g`` in this reader's format."""

    def read(self, file_path: Path, known_labels: Sequence[str] = ()) -> Graph:
        """Read and parse a graph file, logging a summary."""
        self.warnings = []
        try:
            text = file_path.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError(
                f"not valid UTF-8 at byte {e.start}", path=str(file_path)
            ) from e
        g = self.parse(text, known_labels)

        if g.node_count > 0 and not g.is_connected():
            self.add_warning(f"graph is disconnected ({g.component_count()} components)")

        logger.info(f"Loaded {file_path.name}: {g.node_count} nodes, {g.edge_count} edges")
        return g

    @classmethod
    def can_read(cls, file_path: Path) -> bool:
        """Check if this reader handles the given file's extension."""
        return file_path.suffix.lower().lstrip(".") in cls.supported_extensions

    def add_warning(self, warning: str) -> None:
        """Record a non-fatal finding."""
        self.warnings.append(warning)
        logger.warning(f"Reader warning: {warning}")


class ReaderRegistry:
    """
    Registry of available graph readers.

    Provides reader selection by explicit format or by file extension.
    """

    _readers: ClassVar[list[type[BaseReader]]] = []

    @classmethod
    def register(cls, reader_class: type[BaseReader]) -> None:
        """Register a reader class."""
        if reader_class not in cls._readers:
            cls._readers.append(reader_class)
            logger.debug(f"Registered reader: {reader_class.__name__}")

    @classmethod
    def get_reader(cls, file_path: Path, graph_format: GraphFormat | None = None) -> BaseReader:
        """
        Get a reader for a file.

        Args:
            file_path: Path to the file
            graph_format: Explicit format; overrides the extension

        Raises:
            GraphFormatError: no reader matches
        """
        for reader_class in cls._readers:
            if graph_format is not None:
                if reader_class.graph_format == graph_format:
                    return reader_class()
            elif reader_class.can_read(file_path):
                return reader_class()
        raise GraphFormatError(
            f"no reader for {file_path.name!r} (format={graph_format})", path=str(file_path)
        )

    @classmethod
    def get_supported_extensions(cls) -> list[str]:
        """Get list of all supported file extensions."""
        extensions = []
        for reader_class in cls._readers:
            extensions.extend(reader_class.supported_extensions)
        return sorted(set(extensions))
