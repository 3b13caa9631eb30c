from limbkit.units.quantities import (KINDS, Q_, Quantity, convert, efficiency, parse, quantity, si,
                                      speed_from_step_time, ureg)
from limbkit.units.materials import MaterialCatalog, MaterialProps, load_catalog, lookup_material
