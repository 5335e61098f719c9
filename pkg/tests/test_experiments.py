"""Experiment harness: config validation, determinism, runner behavior, CLI."""

import json

import numpy as np
import pytest

from qfimlab.channels import GlobalDepolarizing, LocalDepolarizing, PauliChannel
from qfimlab.circuits import TOY_THETAS, hva_parity_sector_generators, plus_state_density, hva_tfim, toy_model
from qfimlab.dla import dla_dimension
from qfimlab.exceptions import ConfigError
from qfimlab.experiments import (
    channel_from_config,
    config_hash,
    parse_config,
    run_dla,
    run_eig_vs_p,
    run_scaling,
    run_spectrum,
    run_trajectory,
    run_verify,
)
from qfimlab.qfim import qfim_of_circuit


def parse_csv(text):
    lines = text.strip().split("\n")
    assert lines[0].startswith("# qfimlab csv schema=")
    header = lines[1].split(",")
    rows = [line.split(",") for line in lines[2:]]
    return header, rows


class TestConfigValidation:
    def test_unknown_top_level_key(self):
        with pytest.raises(ConfigError, match="unknown keys"):
            parse_config({"experiment": "dla", "circuit": {"name": "toy"}, "extra": 1})

    def test_unknown_nested_key(self):
        with pytest.raises(ConfigError, match="unknown keys"):
            parse_config({"experiment": "dla", "circuit": {"name": "toy", "foo": 2}})

    def test_experiment_mismatch(self):
        with pytest.raises(ConfigError, match="does not match"):
            parse_config({"experiment": "dla"}, experiment="verify")

    def test_unknown_experiment(self):
        with pytest.raises(ConfigError, match="unknown experiment"):
            parse_config({"experiment": "frobnicate"})

    def test_bad_noise_model(self):
        with pytest.raises(ConfigError, match="unknown noise model"):
            parse_config({"experiment": "eig_vs_p", "noise": {"model": "thermal"}})

    def test_bad_probability(self):
        with pytest.raises(ConfigError, match="noise.p"):
            parse_config({"experiment": "eig_vs_p", "noise": {"model": "bit_flip", "p": 1.5}})

    def test_alternative_placement_rejected(self):
        with pytest.raises(ConfigError, match="placement"):
            parse_config(
                {
                    "experiment": "eig_vs_p",
                    "noise": {"model": "bit_flip", "p": 0.1, "placement": "after_only"},
                }
            )

    def test_theta_seed_and_values_exclusive(self):
        with pytest.raises(ConfigError, match="not both"):
            parse_config(
                {"experiment": "spectrum", "theta": {"seed": 1, "values": [0.1]}}
            )

    def test_options_validated_per_experiment(self):
        with pytest.raises(ConfigError, match="options"):
            parse_config({"experiment": "dla", "options": {"steps_per_gate": 5}})

    def test_channel_factory_models(self):
        assert channel_from_config({"model": "none"}, 2) is None
        assert isinstance(
            channel_from_config({"model": "global_depolarizing", "p": 0.1}, 2),
            GlobalDepolarizing,
        )
        local = channel_from_config({"model": "local_depolarizing", "p": [0.1, 0.2]}, 2)
        assert isinstance(local, LocalDepolarizing) and local.probs == (0.1, 0.2)
        pauli = channel_from_config(
            {
                "model": "pauli",
                "terms": [
                    {"alpha": [0, 0], "beta": [0, 0], "prob": 0.8},
                    {"alpha": [1, 0], "beta": [0, 1], "prob": 0.2},
                ],
            },
            2,
        )
        assert isinstance(pauli, PauliChannel)

    def test_config_hash_stable(self):
        raw = {"experiment": "dla", "circuit": {"name": "toy"}}
        assert config_hash(raw) == config_hash(json.loads(json.dumps(raw)))


class TestDeterminism:
    def test_byte_identical_reruns(self):
        cfg = parse_config(
            {
                "experiment": "eig_vs_p",
                "noise": {"model": "bit_flip", "p": 0.1},
                "sweep": {"p": [0.001, 0.01, 0.1, 0.3]},
            }
        )
        assert run_eig_vs_p(cfg) == run_eig_vs_p(cfg)

    def test_workers_do_not_change_row_order(self):
        cfg = parse_config(
            {
                "experiment": "eig_vs_p",
                "noise": {"model": "bit_flip", "p": 0.1},
                "sweep": {"p": [0.01, 0.05, 0.1, 0.2, 0.3]},
            }
        )
        assert run_eig_vs_p(cfg, workers=4) == run_eig_vs_p(cfg, workers=1)

    def test_seventeen_digit_floats(self):
        cfg = parse_config(
            {
                "experiment": "eig_vs_p",
                "noise": {"model": "bit_flip", "p": 0.1},
                "sweep": {"p": [0.1]},
            }
        )
        header, rows = parse_csv(run_eig_vs_p(cfg))
        assert rows[0][header.index("p")] == "0.10000000000000001"


class TestTrajectory:
    def base_config(self, noise, **options):
        return parse_config(
            {
                "experiment": "trajectory",
                "circuit": {"name": "toy"},
                "noise": noise,
                "options": {"steps_per_gate": 8, "eigvec_steps": 8, **options},
            }
        )

    def test_schema_and_labels(self):
        cfg = self.base_config({"model": "none"})
        header, rows = parse_csv(run_trajectory(cfg))
        assert header == ["gate_index", "step", "x", "y", "z", "purity", "label"]
        labels = {r[-1] for r in rows}
        assert {"theta1", "theta2", "theta3", "theta3/eig0", "theta3/eig3"} <= labels

    def test_zero_eigenvalue_direction_is_locally_flat(self):
        # flat to second order: with a small span every point coincides
        cfg = self.base_config({"model": "none"}, eigvec_span=5e-5)
        header, rows = parse_csv(run_trajectory(cfg))
        ix, iy, iz = header.index("x"), header.index("y"), header.index("z")
        for label in ("theta3/eig2", "theta3/eig3"):  # zero-eigenvalue directions
            pts = np.array(
                [[float(r[ix]), float(r[iy]), float(r[iz])] for r in rows if r[-1] == label]
            )
            assert np.max(np.abs(pts - pts[0])) <= 1e-9

    def test_noiseless_eigvec_paths_have_constant_purity(self):
        cfg = self.base_config({"model": "none"}, eigvec_span=1.0)
        header, rows = parse_csv(run_trajectory(cfg))
        ip = header.index("purity")
        for label in ("theta3/eig0", "theta3/eig1", "theta3/eig2", "theta3/eig3"):
            purities = [float(r[ip]) for r in rows if r[-1] == label]
            assert max(purities) - min(purities) <= 1e-9

    def test_noisy_paths_change_purity(self):
        cfg = self.base_config({"model": "bit_flip", "p": 0.1}, eigvec_span=1.0)
        header, rows = parse_csv(run_trajectory(cfg))
        ip = header.index("purity")
        ranges = []
        for k in range(4):
            purities = [float(r[ip]) for r in rows if r[-1] == f"theta3/eig{k}"]
            ranges.append(max(purities) - min(purities))
        assert max(ranges) > 1e-4

    def test_gate_by_gate_rows_present(self):
        cfg = self.base_config({"model": "none"})
        header, rows = parse_csv(run_trajectory(cfg))
        gate_rows = [r for r in rows if r[-1] == "theta2"]
        # 1 input row + 4 gates x 9 steps + 1 terminal row
        assert len(gate_rows) == 1 + 4 * 9 + 1


class TestEigVsP:
    def run(self, grid):
        cfg = parse_config(
            {
                "experiment": "eig_vs_p",
                "noise": {"model": "bit_flip", "p": 0.1},
                "sweep": {"p": grid},
            }
        )
        return parse_csv(run_eig_vs_p(cfg))

    def test_theta1_single_nonzero_eigenvalue(self):
        header, rows = self.run([0.001, 0.01, 0.1, 0.3])
        ie, il = header.index("eigenvalue"), header.index("label")
        ii = header.index("eig_index")
        for r in rows:
            if r[il] == "theta1" and int(r[ii]) > 0:
                assert abs(float(r[ie])) < 1e-12

    def test_theta3_small_p_continuity(self):
        header, rows = self.run([1e-4])
        circ, rho = toy_model()
        noiseless = qfim_of_circuit(circ, TOY_THETAS["theta3"], rho).eigenvalues
        got = [float(r[header.index("eigenvalue")]) for r in rows if r[header.index("label")] == "theta3"]
        np.testing.assert_allclose(got[:2], noiseless[:2], atol=5e-3)
        assert got[2] < 1e-6

    def test_observed_monotone_decrease(self):
        grid = [0.01, 0.05, 0.1, 0.2, 0.3]
        header, rows = self.run(grid)
        il, ip = header.index("label"), header.index("p")
        ii, ie = header.index("eig_index"), header.index("eigenvalue")
        circ, rho = toy_model()
        for label, theta in TOY_THETAS.items():
            r0 = qfim_of_circuit(circ, theta, rho).rank
            for k in range(r0):
                series = [
                    float(r[ie])
                    for p in grid
                    for r in rows
                    if r[il] == label and int(r[ii]) == k and float(r[ip]) == p
                ]
                assert all(a >= b - 1e-12 for a, b in zip(series, series[1:]))


class TestSpectrum:
    def run_cfg(self, model, grid, n=4, L=6, epsilons=()):
        return parse_config(
            {
                "experiment": "spectrum",
                "circuit": {"name": "hva_tfim", "n": n, "L": L},
                "noise": {"model": model, "p": 0.0},
                "theta": {"seed": 42},
                "sweep": {"p": grid},
                "options": {"epsilons": list(epsilons)} if epsilons else {},
            }
        )

    def test_global_depol_preserves_rank(self):
        header, rows = parse_csv(run_spectrum(self.run_cfg("global_depolarizing", [0.05, 0.3], n=3, L=2)))
        ir, irn = header.index("rank"), header.index("rank_noiseless")
        for r in rows:
            assert r[ir] == r[irn]

    def test_local_depol_turns_on_all_eigenvalues(self):
        header, rows = parse_csv(run_spectrum(self.run_cfg("local_depolarizing", [1e-3])))
        ie = header.index("eigenvalue")
        ir = header.index("rank")
        values = [float(r[ie]) for r in rows]
        assert len(values) == 12
        assert min(values) > 1e-12
        assert all(int(r[ir]) == 12 for r in rows)

    def test_quasi_regime_gap(self):
        header, rows = parse_csv(run_spectrum(self.run_cfg("local_depolarizing", [1e-5])))
        ie, irn = header.index("eigenvalue"), header.index("rank_noiseless")
        values = sorted((float(r[ie]) for r in rows), reverse=True)
        r0 = int(rows[0][irn])
        assert values[r0 - 1] / values[r0] >= 10

    def test_epsilon_columns(self):
        header, rows = parse_csv(
            run_spectrum(self.run_cfg("local_depolarizing", [1e-5], epsilons=[1e-2, 1e-12]))
        )
        assert "d1_eps_0.01" in header and "d1_eps_1e-12" in header
        r0 = int(rows[0][header.index("rank_noiseless")])
        assert int(rows[0][header.index("d1_eps_0.01")]) == r0
        assert int(rows[0][header.index("d1_eps_1e-12")]) == 12

    def test_rank_bounded_by_sector_algebra_noiseless(self):
        header, rows = parse_csv(run_spectrum(self.run_cfg("global_depolarizing", [0.1])))
        irn, im, ig = header.index("rank_noiseless"), header.index("M"), header.index("dim_g")
        for r in rows:
            assert int(r[irn]) <= min(int(r[im]), int(r[ig]))
        assert int(rows[0][ig]) == dla_dimension(hva_parity_sector_generators(4))


class TestScaling:
    def test_p_zero_row_matches_noiseless(self):
        cfg = parse_config(
            {
                "experiment": "scaling",
                "circuit": {"name": "hva_tfim", "n": 2, "L": 3},
                "noise": {"model": "global_depolarizing", "p": 0.05},
                "theta": {"seed": 7},
                "sweep": {"p": [0.0, 0.1]},
                "options": {"samples": 2},
            }
        )
        header, rows = parse_csv(run_scaling(cfg))
        ip, ime = header.index("p"), header.index("mean_eigenvalue")
        p0_row = [r for r in rows if float(r[ip]) == 0.0][0]
        # recompute without any noise machinery
        from qfimlab.experiments import subkey_rng

        circ = hva_tfim(2, 3)
        rho = plus_state_density(2)
        eigs = []
        for s in range(2):
            theta = subkey_rng(7, 2, 0, s).uniform(0, 2 * np.pi, 6)
            eigs.append(qfim_of_circuit(circ, theta, rho).eigenvalues)
        assert float(p0_row[ime]) == pytest.approx(float(np.mean(np.concatenate(eigs))), rel=1e-12)

    def test_depth_sweep_shape(self):
        cfg = parse_config(
            {
                "experiment": "scaling",
                "circuit": {"name": "hva_tfim", "n": 2, "L": 2},
                "noise": {"model": "global_depolarizing", "p": 0.05},
                "theta": {"seed": 7},
                "sweep": {"L": [1, 2, 3]},
                "options": {"samples": 2},
            }
        )
        header, rows = parse_csv(run_scaling(cfg))
        assert [r[header.index("M")] for r in rows] == ["2", "4", "6"]


class TestVerifyRunner:
    def test_default_suite_passes(self):
        cfg = parse_config(
            {
                "experiment": "verify",
                "theta": {"seed": 42},
                "options": {"trials": 6, "entropy_trials": 30, "delta_trials": 20,
                            "decomposition_trials": 5},
            }
        )
        text, ok = run_verify(cfg)
        assert ok
        payload = json.loads(text)
        assert payload["all_passed"]
        assert payload["config_sha256"]
        assert all("margin" in c for c in payload["checks"])

    def test_strict_fixed_point_mode(self):
        # opt-in: restricts sampled Pauli channels to strictly contracting
        # ones (every non-identity transfer coefficient inside (-1, 1))
        cfg = parse_config(
            {
                "experiment": "verify",
                "theta": {"seed": 42},
                "options": {"trials": 4, "entropy_trials": 10, "delta_trials": 5,
                            "decomposition_trials": 3, "strict_pauli_fixed_point": True},
            }
        )
        _, ok = run_verify(cfg)
        assert ok

    def test_adversarial_rank_tolerance_reported(self):
        cfg = parse_config(
            {
                "experiment": "verify",
                "theta": {"seed": 42},
                "tolerances": {"rank_abs": 1e-12, "rank_rel": 1e-2},
                "options": {"trials": 6, "entropy_trials": 10, "delta_trials": 5,
                            "decomposition_trials": 3},
            }
        )
        text, ok = run_verify(cfg)
        payload = json.loads(text)
        rank_checks = [
            c for c in payload["checks"] if "rank" in c["name"] and not c["passed"]
        ]
        if not ok:
            assert any("tau_rel=0.01" in c["details"] for c in rank_checks)


class TestDlaRunner:
    def test_toy(self):
        cfg = parse_config({"experiment": "dla", "circuit": {"name": "toy"}})
        payload = json.loads(run_dla(cfg))
        assert payload["dim"] == 3 and payload["match"]

    @pytest.mark.parametrize("n,expected", [(2, 3), (6, 9)])
    def test_ising_ansatz(self, n, expected):
        cfg = parse_config(
            {"experiment": "dla", "circuit": {"name": "hva_tfim", "n": n, "L": 1}}
        )
        payload = json.loads(run_dla(cfg))
        assert payload["dim"] == expected and payload["match"]
        assert payload["dim_full_matrix"] >= expected

    def test_basis_printing(self):
        cfg = parse_config(
            {
                "experiment": "dla",
                "circuit": {"name": "toy"},
                "options": {"print_basis": True},
            }
        )
        payload = json.loads(run_dla(cfg))
        assert len(payload["basis_pauli_expansion"]) == 3


class TestCli:
    def test_end_to_end(self, tmp_path):
        from qfimlab.cli import main

        cfg = {
            "experiment": "eig_vs_p",
            "noise": {"model": "bit_flip", "p": 0.1},
            "sweep": {"p": [0.05, 0.1]},
        }
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text(json.dumps(cfg))
        out_path = tmp_path / "out.csv"
        assert main(["eig_vs_p", "--config", str(cfg_path), "--out", str(out_path)]) == 0
        assert out_path.read_text().startswith("# qfimlab csv schema=1")

    def test_config_error_exit_code(self, tmp_path):
        from qfimlab.cli import main

        cfg_path = tmp_path / "bad.json"
        cfg_path.write_text(json.dumps({"experiment": "eig_vs_p", "bogus": 1}))
        assert main(["eig_vs_p", "--config", str(cfg_path)]) == 1

    def test_missing_config_file(self):
        from qfimlab.cli import main

        assert main(["dla", "--config", "/nonexistent/cfg.json"]) == 1

    def test_verify_exit_codes(self, tmp_path):
        from qfimlab.cli import main

        cfg_path = tmp_path / "verify.json"
        cfg_path.write_text(
            json.dumps(
                {
                    "experiment": "verify",
                    "theta": {"seed": 42},
                    "options": {"trials": 4, "entropy_trials": 10, "delta_trials": 5,
                                "decomposition_trials": 3},
                }
            )
        )
        assert main(["verify", "--config", str(cfg_path)]) == 0

    def test_seed_override(self, tmp_path):
        from qfimlab.cli import main

        cfg = {
            "experiment": "spectrum",
            "circuit": {"name": "hva_tfim", "n": 2, "L": 1},
            "noise": {"model": "global_depolarizing", "p": 0.0},
            "theta": {"seed": 1},
            "sweep": {"p": [0.1]},
        }
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text(json.dumps(cfg))
        out_a = tmp_path / "a.csv"
        out_b = tmp_path / "b.csv"
        assert main(["spectrum", "--config", str(cfg_path), "--out", str(out_a)]) == 0
        assert main(["spectrum", "--config", str(cfg_path), "--seed", "9", "--out", str(out_b)]) == 0
        assert out_a.read_text() != out_b.read_text()
