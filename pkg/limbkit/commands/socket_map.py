"""
    ``limbkit socket-map``: bone tissue depth raster to socket modulus and durometer bands.
"""
import argparse

from limbkit.commands.common import add_common_arguments, output_dir, resolve_config
from limbkit.socket_map import (OUTSIDE_BAND, band_table, map_stiffness, quantize_bands, read_raster, summary,
                                to_frame, verify_inverse_monotonicity, write_raster)
from limbkit.utils.export import write_csv, write_json


def add_subparser(sub: argparse._SubParsersAction):
    parser = sub.add_parser("socket-map", help="Map a bone tissue depth raster to socket stiffness",
                            description="Read a depth raster (header 'width height spacing_mm sentinel', then "
                                        "row-major depths in mm), write the modulus raster, the band raster and the "
                                        "band boundary table. Exits 1 on a malformed raster.")
    add_common_arguments(parser)
    parser.add_argument("input", help="Depth raster file")
    parser.add_argument("--bands", type=int, help="Number of durometer bands (default: socket.bands)")
    parser.add_argument("--unit", help="Modulus unit of the mapping law (default: socket.modulus_unit)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    socket = {key: value for key, value in (("bands", args.bands), ("modulus_unit", args.unit)) if value is not None}
    config = resolve_config(args, {"socket": socket})

    grid = read_raster(args.input)
    field = quantize_bands(map_stiffness(grid, config.mapping_law), config.n_bands)
    record = dict(summary(grid, field), monotonic=verify_inverse_monotonicity(grid, field),
                  boundaries=field.boundaries.tolist(), input=str(args.input))

    out = output_dir(args, config)
    write_raster(field.modulus, out / "modulus.txt", grid.spacing_mm, grid.sentinel)
    write_raster(field.band, out / "bands.txt", grid.spacing_mm, OUTSIDE_BAND)
    write_csv(band_table(field), out / "band_boundaries.csv")
    write_csv(to_frame(grid, field), out / "socket_cells.csv")
    write_json(record, out / "socket_summary.json")

    print(f"Cells inside limb : {record['cells_inside']} of {record['cells']}")
    if record["cells_inside"]:
        print(f"Depth             : {record['min_depth_mm']:g} - {record['max_depth_mm']:g} mm")
        print(f"Modulus           : {record['min_modulus']:g} - {record['max_modulus']:g} {field.unit}")
        print(f"Cells per band    : {record['cells_per_band']}")

    return 0
