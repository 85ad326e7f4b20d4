"""LSB steganography over binary, Fibonacci, prime and natural-number
bit-plane decompositions of 8-bit grayscale images."""

from ._numstego import (
    CapacityError,
    ContractError,
    FormatError,
    RangeError,
    ShapeError,
    StegoError,
    TruncationError,
    WeightTable,
    build_weight_table,
    capacity,
    compose,
    decompose,
    embed,
    extract,
    pixel_order,
    plane_report,
    psnr,
    read_pgm,
    run_cli,
    write_pgm,
    zeckendorf_valid,
)

__all__ = [
    "CapacityError",
    "ContractError",
    "FormatError",
    "RangeError",
    "ShapeError",
    "StegoError",
    "TruncationError",
    "WeightTable",
    "build_weight_table",
    "capacity",
    "compose",
    "decompose",
    "embed",
    "extract",
    "pixel_order",
    "plane_report",
    "psnr",
    "read_pgm",
    "run_cli",
    "write_pgm",
    "zeckendorf_valid",
]
