import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle_inflate
from relicpress.deflate import CompressedBlob, compress, decompress, inflate_raw
from relicpress.errors import InflateError


class TestRoundTrip:
    def test_empty_input(self):
        blob = compress(b"")
        assert blob.original_size == 0
        assert decompress(blob) == b""

    def test_short_text(self):
        blob = compress(b"TC BANKCALL")
        assert decompress(blob) == b"TC BANKCALL"

    @settings(max_examples=200, deadline=None)
    @given(st.binary(max_size=1024))
    def test_random_binary(self, data):
        assert decompress(compress(data)) == data

    def test_high_redundancy_bound(self):
        data = b"TC BANKCALL\n" * (10_240 // 12 + 1)
        assert len(data) >= 10_240
        assert len(compress(data).data) < 200


class TestIndependentInflater:
    def test_hundred_random_blobs_match(self):
        rng = random.Random(404)
        for i in range(100):
            kind = i % 4
            if kind == 0:
                data = bytes(rng.randrange(256) for _ in range(rng.randrange(0, 600)))
            elif kind == 1:
                data = b"CAF ZERO\nTS WHICH\n" * rng.randrange(1, 60)
            elif kind == 2:
                data = bytes([rng.randrange(4)]) * rng.randrange(1, 3000)
            else:
                data = "".join(
                    rng.choice("ACGT \n~") for _ in range(rng.randrange(1, 800))
                ).encode()
            blob = compress(data)
            assert oracle_inflate.inflate(blob.data) == data

    def test_oracle_agrees_on_empty_stream(self):
        assert oracle_inflate.inflate(compress(b"").data) == b""


class TestStreamValidation:
    def test_blob_size_contract(self):
        with pytest.raises(ValueError):
            CompressedBlob(data=b"\x03\x00", original_size=-1)

    def test_corrupt_stream_reports_offset(self):
        # no checksum in a raw stream, so corruption must break the
        # structure to be detectable: force reserved block type 3
        blob = compress(b"A CLEAN STREAM OF WORDS " * 40)
        bad = bytearray(blob.data)
        bad[0] |= 0b110
        with pytest.raises(InflateError) as info:
            inflate_raw(bytes(bad))
        # offset marks where the decompressor stopped consuming input
        assert 0 < info.value.offset <= len(bad)
        assert info.value.detail

    def test_truncated_stream_rejected(self):
        blob = compress(b"SOME INPUT WORTH COMPRESSING " * 20)
        with pytest.raises(InflateError):
            inflate_raw(blob.data[: len(blob.data) // 2])

    def test_size_mismatch_rejected(self):
        blob = compress(b"ABCDEF")
        with pytest.raises(InflateError):
            inflate_raw(blob.data, expected_size=5)

    def test_decompress_checks_recorded_size(self):
        blob = CompressedBlob(data=compress(b"ABCDEF").data, original_size=6)
        assert decompress(blob) == b"ABCDEF"
