"""
Tests for profile loading, environment substitution and settings.
"""

import json

import pytest

from config import loader
from config.loader import ConfigurationError, ProfileLoader, expand_placeholders, load_config
from config.models import CheckName, EvalParams, GridSpec, RunConfig
from config.settings import Settings


class TestProfileLoader:
    """Test loading profiles from a directory."""

    @pytest.mark.unit
    @pytest.mark.config
    def test_load_tiny_profile(self, profile_dir):
        profile = ProfileLoader("tiny", str(profile_dir)).load()
        assert profile.name == "tiny"
        assert profile.eval.a_max == 150
        # verify.json has no eval block, so it inherits eval.json
        assert profile.verify.eval == profile.eval
        assert [c.name for c in profile.verify.get_enabled_checks()] == [CheckName.COCYCLE, CheckName.RATIONALITY]

    @pytest.mark.unit
    @pytest.mark.config
    def test_list_profiles(self, profile_dir):
        (profile_dir / ".hidden").mkdir()
        assert ProfileLoader.list_profiles(str(profile_dir)) == ["tiny"]

    @pytest.mark.unit
    @pytest.mark.config
    def test_missing_profile(self, profile_dir):
        with pytest.raises(ConfigurationError):
            ProfileLoader("absent", str(profile_dir))

    @pytest.mark.unit
    @pytest.mark.config
    def test_invalid_values(self, profile_dir):
        (profile_dir / "tiny" / "eval.json").write_text(json.dumps({"a_max": 0}))
        with pytest.raises(ConfigurationError):
            ProfileLoader("tiny", str(profile_dir)).load()

    @pytest.mark.unit
    @pytest.mark.config
    def test_invalid_json(self, profile_dir):
        (profile_dir / "tiny" / "verify.json").write_text("{checks: ")
        with pytest.raises(ConfigurationError):
            ProfileLoader("tiny", str(profile_dir)).load()

    @pytest.mark.unit
    @pytest.mark.config
    def test_env_substitution(self, profile_dir, monkeypatch):
        (profile_dir / "tiny" / "eval.json").write_text('{"a_max": ${TINY_A_MAX:-90}, "n_max": ${TINY_N_MAX}}')
        monkeypatch.setenv("TINY_N_MAX", "7")
        monkeypatch.delenv("TINY_A_MAX", raising=False)
        profile = ProfileLoader("tiny", str(profile_dir)).load()
        assert (profile.eval.a_max, profile.eval.n_max) == (90, 7)

        monkeypatch.delenv("TINY_N_MAX")
        with pytest.raises(ConfigurationError):
            ProfileLoader("tiny", str(profile_dir)).load()

    @pytest.mark.unit
    @pytest.mark.config
    def test_shipped_profiles_load(self, monkeypatch):
        monkeypatch.setattr(loader, "_config", None)
        monkeypatch.setenv("LOCHMF_QUICK_A_MAX", "123")
        default = load_config("default", force_reload=True)
        quick = load_config("quick", force_reload=True)
        assert quick.eval.a_max == 123
        assert default.eval.a_max == 2000
        assert quick.eval.a_max <= default.eval.a_max
        assert default.verify.get_enabled_checks()


class TestModels:
    """Test validation of parameters and run requests."""

    @pytest.mark.unit
    @pytest.mark.config
    def test_eval_params_overrides(self):
        params = EvalParams()
        assert params.with_overrides(a_max=None) is params
        assert params.with_overrides(a_max=50, tol=None).a_max == 50

    @pytest.mark.unit
    @pytest.mark.config
    def test_grid_must_be_in_upper_half_plane(self):
        with pytest.raises(ValueError):
            GridSpec(y_range=(-1.0, 1.0))
        with pytest.raises(ValueError):
            GridSpec(x_range=(1.0, 0.0))

    @pytest.mark.unit
    @pytest.mark.config
    def test_run_config(self):
        cfg = RunConfig(command="eval", tau=(0.0, 1.0), a_max=10)
        assert cfg.eval_params(EvalParams()).a_max == 10
        with pytest.raises(ValueError):
            RunConfig(command="eval", tau=(0.0, 0.0))
        with pytest.raises(ValueError):
            RunConfig(command="eval", k=1)


class TestSettings:
    """Test environment settings."""

    @pytest.mark.unit
    @pytest.mark.config
    def test_threads_from_environment(self, monkeypatch):
        monkeypatch.setenv("LOCHMF_THREADS", "3")
        monkeypatch.setenv("LOCHMF_PROFILE", "quick")
        settings = Settings()
        assert settings.threads == 3
        assert settings.profile == "quick"

    @pytest.mark.unit
    @pytest.mark.config
    def test_defaults(self, monkeypatch):
        for name in ("LOCHMF_THREADS", "LOCHMF_PROFILE", "LOCHMF_LOG_FILE"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)
        assert settings.threads is None
        assert settings.profile == "default"
        assert settings.log_file is None

    @pytest.mark.unit
    @pytest.mark.config
    def test_model_config(self):
        config = Settings.model_config
        assert config["env_file"] == ".env"
        assert config["case_sensitive"] is False
        assert config["extra"] == "ignore"

    @pytest.mark.unit
    @pytest.mark.config
    def test_dotenv_file(self, tmp_path, monkeypatch):
        for name in ("LOCHMF_THREADS", "LOCHMF_PROFILE"):
            monkeypatch.delenv(name, raising=False)
        (tmp_path / ".env").write_text("LOCHMF_THREADS=5\nLOCHMF_PROFILE=quick\nUNRELATED_KEY=1\n", encoding="utf-8")
        monkeypatch.chdir(tmp_path)
        settings = Settings()
        assert settings.threads == 5
        assert settings.profile == "quick"


class TestPlaceholders:
    """Test ${VAR} expansion on raw profile text."""

    @pytest.mark.unit
    @pytest.mark.config
    def test_expand(self, monkeypatch):
        monkeypatch.setenv("TINY_TOL", "1e-9")
        monkeypatch.delenv("TINY_UNSET", raising=False)
        text = '{"tol": ${TINY_TOL}, "a_max": ${TINY_UNSET:-40}, "note": "$HOME"}'
        assert expand_placeholders(text) == '{"tol": 1e-9, "a_max": 40, "note": "$HOME"}'

    @pytest.mark.unit
    @pytest.mark.config
    def test_lowercase_names_are_left_alone(self):
        assert expand_placeholders("${not_a_var}") == "${not_a_var}"
