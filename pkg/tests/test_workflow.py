"""Tests for the sender/receiver workflows."""

import string

import numpy as np
import pytest

from config import StegoSettings
from posfile.models import SecretKey
from posfile.schema import seal, unseal
from stego.errors import WrongKey
from stego.extractor import extract_message, split_bound_name
from stego.image_model import load_image_file, random_image, save_image
from stego.matcher import match_positions
from stego.models import MatchOptions
from workflow.orchestrator import StegoWorkflow

KEY = SecretKey.from_passphrase("workflow")


@pytest.fixture
def workflow():
    return StegoWorkflow(StegoSettings(stego_key=None, stego_seed=None, debug=False))


@pytest.fixture
def cover_path(tmp_path):
    path = tmp_path / "cover.png"
    save_image(random_image(64, 64, np.random.default_rng(1)), path)
    return path


def test_hide_result(workflow, cover_path, tmp_path):
    """hide reports counts, extent and the phases it went through."""
    result = workflow.hide(cover_path, "HelloWorld", KEY, tmp_path / "p.spm")
    assert result.position_count == 70
    assert result.total_samples == 3 * 64 * 64
    assert result.capacity.estimated_match_bits == 3072
    assert 0 < result.scan_extent < 1
    assert result.capacity_utilization == pytest.approx(70 / 3072)
    assert result.phase_trace[0].startswith("Phase 1")
    assert len(result.phase_trace) == 4


def test_reveal_result(workflow, cover_path, tmp_path):
    """reveal splits off the bound name and reports matching dims."""
    posfile = tmp_path / "p.spm"
    workflow.hide(cover_path, "HelloWorld", KEY, posfile, bind_name="Lena")
    result = workflow.reveal(cover_path, posfile, KEY)
    assert result.message == "HelloWorld"
    assert result.bound_name == "Lena"
    assert result.dims_match
    assert result.warnings == []


def test_reveal_wrong_key(workflow, cover_path, tmp_path):
    """The key gate stops reveal before the cover is read."""
    posfile = tmp_path / "p.spm"
    workflow.hide(cover_path, "x", KEY, posfile)
    with pytest.raises(WrongKey):
        workflow.reveal(tmp_path / "missing.png", posfile, SecretKey(b"other"))


def test_seed_from_settings(cover_path, tmp_path):
    """STEGO_SEED makes sealed files reproducible."""
    seeded = StegoWorkflow(StegoSettings(stego_seed=3, debug=False))
    a, b = tmp_path / "a.spm", tmp_path / "b.spm"
    seeded.hide(cover_path, "same", KEY, a)
    seeded.hide(cover_path, "same", KEY, b)
    assert a.read_bytes() == b.read_bytes()


def test_baseline_embed(workflow, cover_path, tmp_path):
    """Baseline embedding reports its distortion and reads back."""
    stego = tmp_path / "stego.bmp"
    result = workflow.baseline_embed(cover_path, "HelloWorld", stego)
    assert result.bit_count == 70
    assert result.quality.mse > 0
    assert workflow.baseline_reveal(stego, 10) == "HelloWorld"


def test_make_cover(workflow, tmp_path):
    """make_cover writes what it returns."""
    out = tmp_path / "made.ppm"
    cover = workflow.make_cover(7, 5, out, seed=1)
    assert load_image_file(out) == cover


def test_inspect(workflow, cover_path, tmp_path):
    """inspect exposes positions and header fields."""
    posfile = tmp_path / "p.spm"
    workflow.hide(cover_path, "ab", KEY, posfile, bind_name="b")
    result = workflow.inspect(posfile, KEY)
    assert (result.width, result.height) == (64, 64)
    assert result.name_length == 1
    assert len(result.positions) == 21
    assert result.positions == sorted(result.positions)


def test_randomized_round_trips():
    """1000 random (message, cover, key) triples over all of 7-bit ASCII recover the message."""
    rng = np.random.default_rng(1234)
    for _ in range(1000):
        width, height = (int(v) for v in rng.integers(64, 97, size=2))
        cover = random_image(width, height, rng)
        codes = rng.integers(0, 128, size=int(rng.integers(0, 201)))
        message = "".join(chr(int(c)) for c in codes)
        name = "".join(rng.choice(list(string.ascii_letters), size=int(rng.integers(0, 3))))
        key = SecretKey(rng.bytes(int(rng.integers(1, 17))))

        positions = match_positions(cover, message, MatchOptions(bind_image_name=name or None))
        opened = unseal(seal(positions, key, cover.size, name_length=len(name)), key)
        text = extract_message(cover, opened.positions)
        assert split_bound_name(text, opened.name_length) == (message, name)


def test_injected_settings_decide_debug_output(cover_path, tmp_path, monkeypatch, capsys):
    """The workflow's own settings win over a DEBUG variable in the environment."""
    monkeypatch.setenv("DEBUG", "true")
    quiet = StegoWorkflow(StegoSettings(debug=False))
    quiet.hide(cover_path, "hi", KEY, tmp_path / "quiet.spm")
    quiet.reveal(cover_path, tmp_path / "quiet.spm", KEY)
    assert capsys.readouterr().err == ""

    monkeypatch.delenv("DEBUG")
    loud = StegoWorkflow(StegoSettings(debug=True))
    loud.hide(cover_path, "hi", KEY, tmp_path / "loud.spm")
    captured = capsys.readouterr()
    assert "HIDE RESULT" in captured.err
    assert "[PHASE TRACE]" in captured.err
    assert captured.out == ""
