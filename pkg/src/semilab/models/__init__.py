from semilab.models.affine_model import AffineIntegerModel
from semilab.models.base_model import SemigroupModel
from semilab.models.cone_model import ConeModel
from semilab.models.free_model import FreeMonoidModel
from semilab.models.generic_model import BoundedModel
from semilab.models.numerical_model import NumericalModel


__all__ = [
    "AffineIntegerModel",
    "BoundedModel",
    "ConeModel",
    "FreeMonoidModel",
    "NumericalModel",
    "SemigroupModel",
]
