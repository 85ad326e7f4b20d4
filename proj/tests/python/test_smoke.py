import os
import random
import subprocess

import pytest

import numstego


def test_plane_report_matches_table():
    assert numstego.plane_report(8) == [
        ("binary", 8),
        ("fibonacci", 12),
        ("prime", 15),
        ("natural", 23),
    ]


def test_decompose_compose():
    table = numstego.build_weight_table("fibonacci", 8)
    assert table.weights == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]
    digits = numstego.decompose(100, table)
    assert [table.weights[i] for i, d in enumerate(digits) if d] == [3, 8, 89]
    assert numstego.compose(digits, table) == 100
    assert numstego.zeckendorf_valid(digits)
    with pytest.raises(numstego.RangeError):
        numstego.decompose(256, table)


@pytest.mark.parametrize("scheme", ["binary", "fibonacci", "prime", "natural"])
def test_embed_extract_round_trip(scheme):
    rng = random.Random(scheme)
    w, h = 128, 96
    cover = bytes(rng.randrange(256) for _ in range(w * h))
    payload = bytes(rng.randrange(256) for _ in range(100))
    stego, report = numstego.embed(w, h, cover, payload, scheme, plane=1, key=b"k")
    assert report["bits_embedded"] == 32 + 8 * len(payload)
    assert numstego.extract(w, h, stego, scheme, plane=1, key=b"k") == payload
    assert report["psnr_db"] is None or report["psnr_db"] > 0


def test_capacity_error():
    with pytest.raises(numstego.CapacityError):
        numstego.embed(4, 4, bytes(16), b"too long", "binary")


def test_pgm_and_psnr():
    data = numstego.write_pgm(2, 1, b"\x00\xff")
    assert data == b"P5\n2 1\n255\n\x00\xff"
    assert numstego.read_pgm(data) == (2, 1, b"\x00\xff")
    assert numstego.psnr(2, 1, b"\x00\x00", b"\x00\x00") is None
    assert numstego.psnr(1, 1, b"\x00", b"\x01") == pytest.approx(48.1308, abs=1e-3)


def test_keyed_order_is_a_permutation():
    order = numstego.pixel_order(3, 2, b"secret")
    assert order == [5, 0, 2, 4, 1, 3]
    assert numstego.pixel_order(2, 2) == [0, 1, 2, 3]


def test_run_cli_planes():
    code, out, _ = numstego.run_cli(["planes"])
    assert code == 0
    assert "natural    23" in out


@pytest.mark.skipif("NUMSTEGO_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary_round_trip(tmp_path):
    cli = os.environ["NUMSTEGO_CLI"]
    rng = random.Random(5)
    cover = tmp_path / "cover.pgm"
    cover.write_bytes(numstego.write_pgm(64, 64, bytes(rng.randrange(256) for _ in range(4096))))
    msg = tmp_path / "msg.bin"
    msg.write_bytes(b"hidden in plain sight")
    common = ["--scheme", "natural", "--plane", "0"]
    subprocess.run([cli, "embed", *common, "--in", str(cover), "--payload", str(msg),
                    "--out", str(tmp_path / "stego.pgm")], check=True, capture_output=True)
    subprocess.run([cli, "extract", *common, "--in", str(tmp_path / "stego.pgm"),
                    "--out", str(tmp_path / "out.bin")], check=True, capture_output=True)
    assert (tmp_path / "out.bin").read_bytes() == msg.read_bytes()
