"""altprint: altered-fingerprint detection, localization, and synthesis.

Subpackages cover grayscale image primitives (imagecore), procedural
fingerprint synthesis with ground-truth alteration masks (synthgen),
classical ridge features (fpfeatures), a small CPU neural-network engine
(nncore), whole-image and patch classifiers (detector, localizer), a
DC-GAN for altered prints (gansynth), and the evaluation harness
(evaluation). The ``altprint`` CLI wires them into reproducible runs.
"""

from altprint._kernels import get_backend

__version__ = "0.1.0"

__all__ = ["get_backend", "__version__"]
