from limbkit.socket_map.mapper import (OUTSIDE_BAND, DepthGrid, MappingLaw, StiffnessField, band_boundaries,
                                       band_table, map_stiffness, quantize_bands, sentinel_mask, summary, to_frame,
                                       verify_inverse_monotonicity)
from limbkit.socket_map.raster import format_raster, read_raster, write_raster
