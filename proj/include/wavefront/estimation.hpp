// SPDX-License-Identifier: Apache-2.0
//
// wavefront: physical channel models for large antenna arrays
// Copyright (C) 2026 The wavefront authors
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

#ifndef WAVEFRONT_ESTIMATION_HPP
#define WAVEFRONT_ESTIMATION_HPP

#include "geometry.hpp"
#include "wavemodels.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wavefront
{
    // X E has (numerically) dependent columns.
    class SingularSystem : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    enum class Strategy
    {
        Plane,      // OMP over steering vectors
        Joint,      // direction and distance searched together
        Sequential  // direction from steering vectors, then distance at that direction
    };

    inline constexpr std::string_view to_string(Strategy s)
    {
        switch (s)
        {
        case Strategy::Plane:
            return "pwm";
        case Strategy::Joint:
            return "joint";
        case Strategy::Sequential:
            return "seq";
        }
        return "?";
    }

    inline Strategy parse_strategy(std::string_view s)
    {
        if (s == "pwm" || s == "plane")
            return Strategy::Plane;
        if (s == "joint")
            return Strategy::Joint;
        if (s == "seq" || s == "sequential")
            return Strategy::Sequential;
        throw std::invalid_argument("unknown strategy '" + std::string(s) + "' (expected pwm, joint or seq)");
    }

    // y = X h + n
    struct ObservationModel
    {
        Eigen::MatrixXcd X;
        double noise_variance = 0.0;

        static ObservationModel identity(Eigen::Index n, double noise_variance = 0.0)
        {
            return {Eigen::MatrixXcd::Identity(n, n), noise_variance};
        }

        void validate() const
        {
            if (X.rows() < 1 || X.cols() < 1)
                throw std::invalid_argument("observation model: X must be non-empty");
            if (!(noise_variance >= 0.0))
                throw std::invalid_argument("observation model: noise variance must be >= 0");
            for (Eigen::Index i = 0; i < X.rows(); ++i)
                if (X.row(i).squaredNorm() == 0.0)
                    throw std::invalid_argument("observation model: X has an all-zero row");
        }
    };

    // Atoms e_M(u, D) on a direction x distance grid. Column index is
    // direction * distances.size() + distance; plane dictionaries have one column per direction.
    struct Dictionary
    {
        WaveModel model = WaveModel::Plane;
        std::vector<Vec3> directions;
        std::vector<double> distances;
        Eigen::MatrixXcd atoms;

        std::size_t distance_count() const { return uses_distance(model) ? distances.size() : 1; }
        std::size_t size() const { return directions.size() * distance_count(); }
        std::size_t column(std::size_t direction, std::size_t distance) const
        {
            return direction * distance_count() + distance;
        }
    };

    // n azimuths uniformly covering [0, pi] (endpoints included), in the x-y plane
    inline std::vector<Vec3> azimuth_grid(int n)
    {
        if (n < 1)
            throw std::invalid_argument("azimuth_grid: n must be >= 1");
        std::vector<Vec3> dirs;
        dirs.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            dirs.push_back(azimuth_direction(n == 1 ? 0.5 * std::numbers::pi : std::numbers::pi * i / (n - 1)));
        return dirs;
    }

    inline Dictionary make_dictionary(WaveModel model, const AntennaArray &array, std::vector<Vec3> directions,
                                      std::vector<double> distances, double lambda)
    {
        if (directions.empty())
            throw std::invalid_argument("make_dictionary: no directions");
        if (uses_distance(model) && distances.empty())
            throw std::invalid_argument("make_dictionary: curved models need at least one distance");
        if (!uses_distance(model))
            distances.clear();

        Dictionary d{model, std::move(directions), std::move(distances), {}};
        d.atoms.resize(static_cast<Eigen::Index>(array.size()), static_cast<Eigen::Index>(d.size()));
        for (std::size_t i = 0; i < d.directions.size(); ++i)
            for (std::size_t k = 0; k < d.distance_count(); ++k)
            {
                const double dist = uses_distance(model) ? d.distances[k] : 1.0;
                d.atoms.col(static_cast<Eigen::Index>(d.column(i, k))) =
                    characteristic_entries(model, array, d.directions[i], dist, lambda);
            }
        return d;
    }

    // Dictionary seen through the pilot matrix: columns X e and their norms.
    struct SensedDictionary
    {
        const Dictionary *dictionary = nullptr;
        Eigen::MatrixXcd projected;
        Eigen::VectorXd norms;
    };

    inline SensedDictionary sense(const Dictionary &d, const ObservationModel &obs)
    {
        if (obs.X.cols() != d.atoms.rows())
            throw std::invalid_argument("sense: X column count does not match the array size");
        SensedDictionary s{&d, {}, {}};
        if (obs.X.rows() == obs.X.cols() && obs.X.isIdentity(0.0))
            s.projected = d.atoms;
        else
            s.projected = obs.X * d.atoms;
        s.norms = s.projected.colwise().norm().transpose();
        return s;
    }

    // alpha minimizing ||y - X E alpha||, via column-pivoted QR of X E.
    inline Eigen::VectorXcd least_squares_gains(const Eigen::MatrixXcd &E, const Eigen::MatrixXcd &X,
                                                const Eigen::VectorXcd &y)
    {
        if (X.cols() != E.rows() || X.rows() != y.size())
            throw std::invalid_argument("least_squares_gains: dimension mismatch");
        const Eigen::MatrixXcd A = X * E;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
        if (qr.rank() < A.cols())
            throw SingularSystem("least_squares_gains: X E is rank deficient");
        return qr.solve(y);
    }

    struct Selection
    {
        std::size_t direction = 0;
        std::size_t distance = 0;
        double score = 0.0; // |r^H X e| / ||X e||
    };

    namespace detail
    {
        // argmax over columns [first, first + count) of the normalized correlation, lowest index on ties
        inline std::pair<std::size_t, double> best_column(const Eigen::VectorXcd &residual, const SensedDictionary &sd,
                                                          std::size_t first, std::size_t count)
        {
            const Eigen::VectorXcd c =
                sd.projected.middleCols(static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(count)).adjoint() * residual;
            std::size_t arg = 0;
            double best = -1.0;
            for (std::size_t i = 0; i < count; ++i)
            {
                const double nrm = sd.norms[static_cast<Eigen::Index>(first + i)];
                const double v = nrm > 0.0 ? std::abs(c[static_cast<Eigen::Index>(i)]) / nrm : 0.0;
                if (v > best)
                {
                    best = v;
                    arg = i;
                }
            }
            return {first + arg, best};
        }

        inline void check_residual(const Eigen::VectorXcd &residual, const SensedDictionary &sd)
        {
            if (sd.dictionary == nullptr)
                throw std::invalid_argument("selection: sensed dictionary is empty");
            if (residual.size() != sd.projected.rows())
                throw std::invalid_argument("selection: residual length does not match the observation count");
        }
    }

    // Steering-vector selection. `correlations` is incremented by the number of atoms tested.
    inline Selection select_pwm(const Eigen::VectorXcd &residual, const SensedDictionary &pwm,
                                std::uint64_t *correlations = nullptr)
    {
        detail::check_residual(residual, pwm);
        if (pwm.dictionary->model != WaveModel::Plane)
            throw std::invalid_argument("select_pwm: dictionary must use the plane model");
        const auto [col, score] = detail::best_column(residual, pwm, 0, pwm.dictionary->size());
        if (correlations)
            *correlations += pwm.dictionary->size();
        return {col, 0, score};
    }

    // Exhaustive search over all direction x distance atoms.
    inline Selection select_joint(const Eigen::VectorXcd &residual, const SensedDictionary &curved,
                                  std::uint64_t *correlations = nullptr)
    {
        detail::check_residual(residual, curved);
        const Dictionary &d = *curved.dictionary;
        if (!uses_distance(d.model))
            throw std::invalid_argument("select_joint: dictionary must use a curved model");
        const auto [col, score] = detail::best_column(residual, curved, 0, d.size());
        if (correlations)
            *correlations += d.size();
        return {col / d.distance_count(), col % d.distance_count(), score};
    }

    // Direction from the steering vectors, then the best distance along that direction.
    inline Selection select_sequential(const Eigen::VectorXcd &residual, const SensedDictionary &pwm,
                                       const SensedDictionary &curved, std::uint64_t *correlations = nullptr)
    {
        detail::check_residual(residual, curved);
        const Dictionary &d = *curved.dictionary;
        if (!uses_distance(d.model))
            throw std::invalid_argument("select_sequential: second dictionary must use a curved model");
        if (pwm.dictionary == nullptr || pwm.dictionary->directions.size() != d.directions.size())
            throw std::invalid_argument("select_sequential: dictionaries must share the direction grid");
        const Selection dir = select_pwm(residual, pwm, correlations);
        const auto [col, score] = detail::best_column(residual, curved, d.column(dir.direction, 0), d.distance_count());
        if (correlations)
            *correlations += d.distance_count();
        return {dir.direction, col % d.distance_count(), score};
    }

    struct SelectedAtom
    {
        std::size_t direction_index = 0;
        std::size_t distance_index = 0;
        Vec3 direction = Vec3::UnitY();
        std::optional<double> distance; // absent for steering vectors
        double score = 0.0;
    };

    struct EstimationResult
    {
        std::vector<SelectedAtom> selected;
        Eigen::VectorXcd alpha;         // sqrt(N) * path gains
        ChannelVector h_hat;
        std::vector<double> residual_norms; // ||y|| first, then after every iteration
        std::uint64_t correlation_count = 0;
        std::vector<std::string> warnings;
    };

    // Dictionaries used by a strategy: Plane needs `pwm`, Joint needs `curved`, Sequential both.
    struct StrategyDictionaries
    {
        const SensedDictionary *pwm = nullptr;
        const SensedDictionary *curved = nullptr;
    };

    // Called after each iteration with the 1-based iteration number and the current state.
    using IterationObserver = std::function<void(int, const EstimationResult &)>;

    // Greedy (orthogonal matching pursuit) estimation with p iterations.
    //
    // Each iteration selects an atom by normalized correlation with the residual,
    // appends it to E, refits all gains by least squares and updates the residual.
    // An atom that is already in E is skipped with a warning; an atom that makes
    // X E singular is dropped with a warning.
    inline EstimationResult greedy_estimate(const Eigen::VectorXcd &y, const ObservationModel &obs,
                                            StrategyDictionaries dicts, Strategy strategy, int p,
                                            const IterationObserver &observer = {})
    {
        if (p < 1)
            throw std::invalid_argument("greedy_estimate: p must be >= 1");
        if (p > obs.X.rows())
            throw std::invalid_argument("greedy_estimate: p must not exceed the number of observations");
        if (y.size() != obs.X.rows())
            throw std::invalid_argument("greedy_estimate: y length does not match X");

        const SensedDictionary *atoms_from = nullptr;
        switch (strategy)
        {
        case Strategy::Plane:
            if (!dicts.pwm)
                throw std::invalid_argument("greedy_estimate: plane strategy needs a steering-vector dictionary");
            atoms_from = dicts.pwm;
            break;
        case Strategy::Joint:
            if (!dicts.curved)
                throw std::invalid_argument("greedy_estimate: joint strategy needs a curved dictionary");
            atoms_from = dicts.curved;
            break;
        case Strategy::Sequential:
            if (!dicts.pwm || !dicts.curved)
                throw std::invalid_argument("greedy_estimate: sequential strategy needs both dictionaries");
            atoms_from = dicts.curved;
            break;
        }
        const Dictionary &dict = *atoms_from->dictionary;
        if (atoms_from->projected.rows() != obs.X.rows() || dict.atoms.rows() != obs.X.cols())
            throw std::invalid_argument("greedy_estimate: dictionary was sensed with a different X");

        const Eigen::Index n_t = obs.X.cols();
        EstimationResult res;
        res.alpha.resize(0);
        res.h_hat.entries = Eigen::VectorXcd::Zero(n_t);
        Eigen::VectorXcd residual = y;
        res.residual_norms.push_back(residual.norm());

        std::vector<std::size_t> columns;
        Eigen::MatrixXcd A(obs.X.rows(), 0); // X E
        Eigen::MatrixXcd E(n_t, 0);

        for (int it = 1; it <= p; ++it)
        {
            Selection sel;
            switch (strategy)
            {
            case Strategy::Plane:
                sel = select_pwm(residual, *dicts.pwm, &res.correlation_count);
                break;
            case Strategy::Joint:
                sel = select_joint(residual, *dicts.curved, &res.correlation_count);
                break;
            case Strategy::Sequential:
                sel = select_sequential(residual, *dicts.pwm, *dicts.curved, &res.correlation_count);
                break;
            }
            const std::size_t col = dict.column(sel.direction, sel.distance);

            if (std::find(columns.begin(), columns.end(), col) != columns.end())
            {
                res.warnings.push_back("iteration " + std::to_string(it) + ": atom " + std::to_string(col) +
                                       " already selected, skipped (p may exceed the number of resolvable paths)");
            }
            else
            {
                Eigen::MatrixXcd A_next(A.rows(), A.cols() + 1);
                A_next << A, atoms_from->projected.col(static_cast<Eigen::Index>(col));
                Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A_next);
                if (qr.rank() < A_next.cols())
                {
                    res.warnings.push_back("iteration " + std::to_string(it) + ": atom " + std::to_string(col) +
                                           " makes X E singular, dropped");
                }
                else
                {
                    Eigen::MatrixXcd E_next(n_t, E.cols() + 1);
                    E_next << E, dict.atoms.col(static_cast<Eigen::Index>(col));
                    A = std::move(A_next);
                    E = std::move(E_next);
                    columns.push_back(col);
                    res.alpha = qr.solve(y);
                    residual = y - A * res.alpha;
                    res.h_hat.entries = E * res.alpha;

                    SelectedAtom atom;
                    atom.direction_index = sel.direction;
                    atom.distance_index = sel.distance;
                    atom.direction = dict.directions[sel.direction];
                    if (uses_distance(dict.model))
                        atom.distance = dict.distances[sel.distance];
                    atom.score = sel.score;
                    res.selected.push_back(atom);
                }
            }
            res.residual_norms.push_back(residual.norm());
            if (observer)
                observer(it, res);
        }
        return res;
    }

    // ||h - h_hat||^2 / ||h||^2
    inline double relative_error(const Eigen::VectorXcd &h, const Eigen::VectorXcd &h_hat)
    {
        if (h.size() != h_hat.size())
            throw std::invalid_argument("relative_error: length mismatch");
        const double e = h.squaredNorm();
        if (!(e > 0.0))
            throw std::invalid_argument("relative_error: true channel must be non-zero");
        return (h - h_hat).squaredNorm() / e;
    }
}

#endif
