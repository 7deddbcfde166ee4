// SPDX-License-Identifier: Apache-2.0
//
// risforge - active multi-RIS MIMO link simulator and optimizer
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "risforge/errors.hpp"

namespace risforge
{
    inline constexpr double kSpeedOfLight = 299792458.0; // [m/s]

    template <typename Scalar>
    using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
    template <typename Scalar>
    using Mat3X = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;
    template <typename Scalar>
    using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
    template <typename Scalar>
    using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
    template <typename Scalar>
    using RVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    using Vec3d = Vec3<double>;
    using CMatrixd = CMatrix<double>;
    using CVectord = CVector<double>;

    template <typename Scalar>
    constexpr Scalar two_pi()
    {
        return Scalar(2) * std::numbers::pi_v<Scalar>;
    }

    // Quantized phase selection for one panel. Index q_k realizes the phase
    // q_k * 2*pi / 2^B on element k.
    struct PhaseConfig
    {
        std::string panel_id;
        std::vector<int> indices;

        bool operator==(const PhaseConfig &) const = default;
    };

    // One active RIS array: geometry plus the per-element LNA/PS parameters.
    template <typename Scalar>
    struct RisPanel
    {
        std::string id;
        Vec3<Scalar> center = Vec3<Scalar>::Zero(); // [m], global frame
        Vec3<Scalar> normal = Vec3<Scalar>(0, 1, 0); // unit broadside direction
        int rows = 1;
        int cols = 1;
        Scalar spacing = Scalar(0);                 // element pitch [m]
        Scalar lna_gain_db = Scalar(0);             // per-element field gain, c = 10^(dB/20)
        int phase_bits = 1;                         // B, phase shifter resolution
        Scalar element_noise_power = Scalar(0);     // sigma_z^2 [W]
        std::vector<Vec3<Scalar>> explicit_positions; // optional local-frame override

        int element_count() const { return rows * cols; }
        int phase_levels() const { return 1 << phase_bits; }
        Scalar phase_step() const { return two_pi<Scalar>() / Scalar(phase_levels()); }
        Scalar lna_gain() const { return std::pow(Scalar(10), lna_gain_db / Scalar(20)); }

        void validate() const
        {
            if (id.empty())
                throw ValidationError("panel id must be non-empty");
            if (rows < 1 || cols < 1)
                throw ValidationError("panel '" + id + "': rows and cols must be >= 1");
            if (!(spacing > Scalar(0)))
                throw ValidationError("panel '" + id + "': spacing must be > 0");
            if (phase_bits < 1 || phase_bits > 8)
                throw ValidationError("panel '" + id + "': phase_bits must lie in [1, 8]");
            if (!(lna_gain_db >= Scalar(0)))
                throw ValidationError("panel '" + id + "': lna_gain_db must be >= 0");
            if (!(element_noise_power >= Scalar(0)))
                throw ValidationError("panel '" + id + "': element_noise_power must be >= 0");
            if (!center.allFinite() || !normal.allFinite())
                throw ValidationError("panel '" + id + "': non-finite center or normal");
            if (std::abs(normal.norm() - Scalar(1)) > Scalar(1e-9))
                throw ValidationError("panel '" + id + "': normal must be a unit vector");
            if (!explicit_positions.empty() &&
                static_cast<int>(explicit_positions.size()) != element_count())
                throw ValidationError("panel '" + id + "': element position list has " +
                                      std::to_string(explicit_positions.size()) +
                                      " entries, expected rows*cols = " +
                                      std::to_string(element_count()));
        }

        void validate_config(const PhaseConfig &config) const
        {
            if (config.panel_id != id)
                throw ConfigError("phase config for panel '" + config.panel_id +
                                  "' applied to panel '" + id + "'");
            if (static_cast<int>(config.indices.size()) != element_count())
                throw ConfigError("panel '" + id + "': config has " +
                                  std::to_string(config.indices.size()) +
                                  " indices, expected " + std::to_string(element_count()));
            for (int q : config.indices)
                if (q < 0 || q >= phase_levels())
                    throw ConfigError("panel '" + id + "': phase index " + std::to_string(q) +
                                      " outside [0, " + std::to_string(phase_levels()) + ")");
        }
    };

    // Channel matrices of one scenario realization: direct BS-UE channel plus
    // per-panel BS-RIS and RIS-UE blocks.
    template <typename Scalar>
    struct ChannelSet
    {
        CMatrix<Scalar> h_direct;              // N_r x N_t
        std::vector<CMatrix<Scalar>> g_list;   // each N_r x K_l (RIS -> UE)
        std::vector<CMatrix<Scalar>> f_list;   // each K_l x N_t (BS -> RIS)
        Scalar wavelength = Scalar(0);         // [m]

        Eigen::Index n_rx() const { return h_direct.rows(); }
        Eigen::Index n_tx() const { return h_direct.cols(); }

        void validate(const std::vector<RisPanel<Scalar>> &panels) const
        {
            if (g_list.size() != f_list.size())
                throw ConfigError("channel set: g_list and f_list lengths differ");
            if (g_list.size() != panels.size())
                throw ConfigError("channel set holds " + std::to_string(g_list.size()) +
                                  " panels, scenario declares " + std::to_string(panels.size()));
            if (!h_direct.allFinite())
                throw NumericError("channel set: non-finite direct channel");
            for (std::size_t l = 0; l < panels.size(); ++l)
            {
                const auto k = panels[l].element_count();
                if (g_list[l].rows() != h_direct.rows() || g_list[l].cols() != k ||
                    f_list[l].rows() != k || f_list[l].cols() != h_direct.cols())
                    throw ConfigError("channel set: dimension mismatch for panel '" +
                                      panels[l].id + "'");
                if (!g_list[l].allFinite() || !f_list[l].allFinite())
                    throw NumericError("channel set: non-finite entries for panel '" +
                                       panels[l].id + "'");
            }
        }
    };

    // Scenario geometry: terminals, panels and the synthetic multipath knobs.
    template <typename Scalar>
    struct ScenarioGeometry
    {
        Vec3<Scalar> bs_position = Vec3<Scalar>::Zero();
        int n_tx = 1;
        Scalar bs_antenna_spacing = Scalar(0); // pitch of both terminal ULAs [m]
        Vec3<Scalar> ue_position = Vec3<Scalar>::Zero();
        int n_rx = 1;
        std::vector<RisPanel<Scalar>> panels;
        Scalar carrier_frequency_hz = Scalar(0);
        int n_scatterers_per_link = 0;
        Scalar scatter_gain_db = Scalar(0); // mean scatter-ray power relative to the LoS ray
        std::uint64_t seed = 0;

        Scalar wavelength() const { return Scalar(kSpeedOfLight) / carrier_frequency_hz; }

        void validate() const
        {
            if (!(carrier_frequency_hz > Scalar(0)))
                throw ValidationError("carrier_frequency_hz must be > 0");
            if (n_tx < 1 || n_rx < 1)
                throw ValidationError("antenna counts must be >= 1");
            if (!(bs_antenna_spacing > Scalar(0)))
                throw ValidationError("antenna spacing must be > 0");
            if (n_scatterers_per_link < 0)
                throw ValidationError("scatterer count must be >= 0");
            if (!bs_position.allFinite() || !ue_position.allFinite() ||
                !std::isfinite(static_cast<double>(scatter_gain_db)))
                throw ValidationError("geometry contains non-finite values");

            std::vector<std::pair<std::string, Vec3<Scalar>>> pts;
            pts.emplace_back("bs", bs_position);
            pts.emplace_back("ue", ue_position);
            for (const auto &p : pts) // suppress unused warning pattern-free
                (void)p;
            for (const auto &panel : panels)
            {
                panel.validate();
                pts.emplace_back("panel '" + panel.id + "'", panel.center);
            }
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j)
                    if ((pts[i].second - pts[j].second).norm() == Scalar(0))
                        throw ValidationError("positions of " + pts[i].first + " and " +
                                              pts[j].first + " coincide");
            for (std::size_t i = 0; i < panels.size(); ++i)
                for (std::size_t j = i + 1; j < panels.size(); ++j)
                    if (panels[i].id == panels[j].id)
                        throw ValidationError("duplicate panel id '" + panels[i].id + "'");
        }
    };

    using RisPaneld = RisPanel<double>;
    using ChannelSetd = ChannelSet<double>;
    using ScenarioGeometryd = ScenarioGeometry<double>;
}
