import pytest

import wlz

TEXT = b"the cat sat on the mat, and the cat sat on the hat.\n" * 50


def test_round_trip_default_preset():
    packed = wlz.compress(TEXT)
    assert packed[:4] == b"WLZ7"
    assert len(packed) < len(TEXT)
    assert wlz.decompress(packed) == TEXT


@pytest.mark.parametrize("variant", ["lz77", "lzss", "lazy", "short"])
@pytest.mark.parametrize("structure", ["BT", "HT2", "PTH"])
def test_round_trip_config(variant, structure):
    cfg = wlz.Config.direct_bit()
    cfg.variant = variant
    cfg.structure = structure
    cfg.window_log2 = 12
    assert wlz.decompress(wlz.compress(TEXT, cfg)) == TEXT


def test_empty_and_binary():
    assert wlz.decompress(wlz.compress(b"")) == b""
    blob = bytes(range(256)) * 8
    assert wlz.decompress(wlz.compress(blob)) == blob


def test_preset_best_fields():
    cfg = wlz.preset_best()
    assert cfg.structure == "PTH"
    assert cfg.window_log2 == 20
    assert cfg.max_match == 16
    assert cfg.offset_coder == "bblock"
    assert cfg.length_coder == "huffman"
    assert "--window-log2 20" in cfg.describe()


def test_tokenize():
    assert wlz.tokenize(b"Hello, world!") == [b"Hello", b", ", b"world", b"!"]


def test_invalid_config_raises():
    cfg = wlz.Config()
    cfg.max_match = 1 << 20
    with pytest.raises(wlz.ConfigError):
        wlz.compress(TEXT, cfg)
    with pytest.raises(wlz.Error):
        cfg.structure = "XYZ"


def test_corrupt_container_raises():
    packed = wlz.compress(TEXT)
    with pytest.raises(wlz.CorruptError):
        wlz.decompress(packed[: len(packed) // 2])
    with pytest.raises(wlz.CorruptError):
        wlz.decompress(b"nope")


def test_known_corpora():
    assert "bible.txt" in wlz.known_corpora()
