from .evaluation import router as evaluation_router
from .expansion import router as expansion_router
from .epsilon import router as epsilon_router
from .enumeration import router as enumeration_router
from .roundtrip import router as roundtrip_router
from .schema import router as schema_router
from .router import (
    App,
    CommandRouter,
    arg,
    positive_int,
    non_negative_int,
)
