"""
========================================================
`spdmidrange`: THOMPSON-METRIC MIDRANGES OF SPD MATRICES
========================================================

`spdmidrange` computes minimax centers (midranges) of symmetric positive definite matrices under
the Thompson metric with the Inductive Midrange (IMR) algorithm, and uses them as centroids for
K-means, K-means++ and X-means clustering on the SPD cone.
"""


from importlib.metadata import version, PackageNotFoundError
from pathlib import Path
import tomllib

from .core.clustering.accuracy import AccuracyReport, score_accuracy
from .core.clustering.bic import BicLikelihood, BicScore, bic_score
from .core.clustering.dataset import Dataset
from .core.clustering.init import InitStrategy, kmeans_pp_init
from .core.clustering.kmeans import kmeans
from .core.clustering.model import ClusterModel
from .core.clustering.xmeans import xmeans

from .core.midrange.active import ActiveDataReport, detect_active_data
from .core.midrange.imr import ImrConfig, ImrTrace, imr_cost, inductive_midrange
from .core.midrange.oracle import optimization_midrange_2d
from .core.midrange.scalar import scalar_geometric_midrange, scalar_inductive_midrange

from .core.spd.cone import cone_projection
from .core.spd.linalg import gen_extremal_eig, loewner_leq, matrix_exp, matrix_log, matrix_power
from .core.spd.matrix import EigenPair, SpdMatrix, cholesky, make_spd
from .core.spd.riemann import riemannian_distance, riemannian_geodesic

from .core.thompson.geodesic import GeodesicWeight, geodesic_antipode, thompson_geodesic
from .core.thompson.metric import congruence, thompson_distance, thompson_distances
from .core.thompson.sphere import SphereSample, sphere_sample

from .core.util.config import SpdConfig
from .core.util.errors import SpdError, SpdNumericalError, SpdValidationError
from .core.util.rng import make_stream, run_stream


try:
    __version__: str = version(distribution_name='spdmidrange')

except PackageNotFoundError:
    with open(file=Path(__file__).parent.parent / 'pyproject.toml', mode='rb') as f:
        __version__: str = tomllib.load(f)['tool']['poetry']['version']
