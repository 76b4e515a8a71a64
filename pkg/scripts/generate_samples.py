"""Write synthetic field-sample CSV files for the ``ingest`` command."""
import argparse
import logging
import math
import sys
from pathlib import Path

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from stokes3d.config import settings
from stokes3d.ingest.signal import HEADER, sample_orbit
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.utils.parsing import parse_vector3

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


def write_samples(
    ic: InitialConditions,
    path: Path,
    count: int,
    noise: float,
    seed: int,
    omega: float
) -> Path:
    """Sample one period of the orbit at ``count`` uniform times and write them as CSV."""
    times = np.linspace(0.0, 2.0 * math.pi / omega, count, endpoint=False)
    rng = np.random.default_rng(seed)
    series = sample_orbit(ic, times, noise=noise, rng=rng, omega=omega)
    rows = np.column_stack([series.time_array, series.sample_array])
    header = (
        f"# a={ic.a} b={ic.b} omega={omega} noise={noise} seed={seed}\n" + ",".join(HEADER)
    )
    np.savetxt(path, rows, delimiter=",", header=header, comments="", fmt="%.17g")
    logger.info(f"Wrote {count} samples to {path}")
    return path


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=parse_vector3, default=(2.0, 0.0, 0.0))
    parser.add_argument("--b", type=parse_vector3, default=(0.0, 1.0, 0.0))
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--noise", type=float, default=0.0)
    parser.add_argument("--omega", type=float, default=1.0)
    parser.add_argument("--seed", type=int, default=settings.default_seed)
    parser.add_argument("--out", type=Path, default=Path("samples.csv"))
    args = parser.parse_args()

    try:
        ic = InitialConditions(a=args.a, b=args.b)
        write_samples(ic, args.out, args.count, args.noise, args.seed, args.omega)
    except Exception as e:
        logger.error(f"Failed to write samples: {e}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
