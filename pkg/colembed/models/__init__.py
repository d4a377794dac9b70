from .json_serialize import JsonSerialize, rational_str
from .host import HostShape, ColoredHost, BoundednessReport, MULTIPARTITE, HYPERGRAPH, canonical_edge
from .pattern import Pattern, DegreeProfile, PatternCherry, PatternQuadruple, EdgePair
from .events import CanonicalEvent, BadEvent, Violation
from .embedding import Embedding, EmbedConfig, EmbedReport, PROPER, RAINBOW
from .certificate import EventFamilySpec, LLLCertificate, ClassBreakdown, NegativeDependencyReport, LOCAL, GLOBAL
from .validation import ValidationReport, CrossCheckReport
from .designs import ProjectivePlane, DesignHypergraph, ClusteredColoring
