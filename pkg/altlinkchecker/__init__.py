__version__ = "1.0.0"

from .checker import HyperbolicityChecker  # noqa: E402
from .models import CombinatorialMap, LinkDiagram, SurfaceInfo  # noqa: E402
from .parser import DiagramParser  # noqa: E402

__all__ = ["CombinatorialMap", "DiagramParser", "HyperbolicityChecker", "LinkDiagram", "SurfaceInfo", "__version__"]
