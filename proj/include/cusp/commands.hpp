#pragma once

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cusp/evolute.hpp"
#include "cusp/expr.hpp"
#include "cusp/invariance.hpp"
#include "cusp/svg.hpp"

// CLI command implementations. Each command returns its JSON report plus a
// process exit code:
//   0  success (Inconclusive is a result, not an error)
//   1  usage or expression parse error
//   2  violated mathematical precondition (inflection at 0, order exhausted)
//   3  property-suite failure
// Rationals are serialized as "p/q" strings ("p" when q = 1), never as
// floats; float-backend values are JSON numbers.

namespace cusp {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    int order = 0; // 0: per-command default (16 for classify, 24 for evolute/plot)
    std::string backend = "rational";
    double tol = 1e-9;
    int max_evolute = 3;
    double t_min = -1.0;
    double t_max = 1.0;
    int samples = 200;
    std::string out_path = "plot.svg";
    std::uint64_t seed = 1;
    int trials = 100;
    int fact22_max_n = 13;
    bool corrupt77 = false; // negative control for the property suite
};

struct CommandResult {
    int exit_code = 0;
    ordered_json report;
    std::string svg; // filled by the plot command
};

namespace detail {

inline ordered_json scalar_json(const Rational& v) { return v.to_string(); }
inline ordered_json scalar_json(double v) { return v; }

template <class S>
ordered_json jet_coeffs_json(const Jet<S>& j) {
    ordered_json o = ordered_json::object();
    for (int k = 0; k <= j.order(); ++k)
        if (scalar_traits<S>::sign(j.coeff(k)) != 0) o[std::to_string(k)] = scalar_json(j.coeff(k));
    return o;
}

template <class S>
ordered_json witness_json(const Witness<S>& w) {
    ordered_json o = ordered_json::object();
    o["n"] = w.n;
    if (w.A) o["A"] = scalar_json(*w.A);
    if (w.B) o["B"] = scalar_json(*w.B);
    if (w.C) o["C"] = scalar_json(*w.C);
    if (w.D) o["D"] = scalar_json(*w.D);
    if (w.numerator) o["numerator"] = scalar_json(*w.numerator);
    if (w.kappa_q) o["kappa_q"] = *w.kappa_q;
    if (w.T) o["T"] = scalar_json(*w.T);
    return o;
}

inline ordered_json error_json(const std::string& kind, const std::string& what) {
    ordered_json o = ordered_json::object();
    o["error"] = kind;
    o["message"] = what;
    return o;
}

inline CommandResult parse_failure(const parse_error& e) {
    ordered_json o = error_json("parse", e.what());
    o["position"] = e.position();
    o["expected"] = e.expected();
    return {1, o, ""};
}

inline bool validate_config(const RunConfig& cfg, int effective_order, CommandResult& out) {
    if (effective_order < 2) {
        out = {1, error_json("usage", "order must be at least 2"), ""};
        return false;
    }
    if (cfg.samples < 2) {
        out = {1, error_json("usage", "samples must be at least 2"), ""};
        return false;
    }
    if (!(cfg.tol > 0.0)) {
        out = {1, error_json("usage", "tol must be positive"), ""};
        return false;
    }
    if (cfg.backend != "rational" && cfg.backend != "float") {
        out = {1, error_json("usage", "backend must be 'rational' or 'float'"), ""};
        return false;
    }
    return true;
}

template <class S>
ordered_json classification_json(const Classification<S>& r) {
    ordered_json o = ordered_json::object();
    o["class"] = to_string(r.cls.tag);
    o["n"] = r.cls.n != 0 ? r.cls.n : r.witness.n;
    o["sufficient_only"] = r.cls.sufficient_only;
    if (!r.cls.reason.empty()) o["reason"] = r.cls.reason;
    o["witness"] = witness_json(r.witness);
    ordered_json conds = ordered_json::array();
    for (const auto& ck : r.checks) {
        ordered_json c = ordered_json::object();
        c["criterion"] = ck.criterion;
        c["pass"] = ck.pass;
        c["value"] = ck.detail;
        conds.push_back(c);
    }
    o["conditions"] = conds;
    return o;
}

} // namespace detail

inline CommandResult cmd_classify(const std::string& x_expr, const std::string& y_expr, const RunConfig& cfg) {
    const int order = cfg.order > 0 ? cfg.order : 16;
    CommandResult res;
    if (!detail::validate_config(cfg, order, res)) return res;

    CurveExpr expr;
    try {
        expr = CurveExpr::parse(x_expr, y_expr);
    } catch (const parse_error& e) {
        return detail::parse_failure(e);
    }

    ClassifyOptions opt;
    opt.fact22_max_n = cfg.fact22_max_n;
    opt.tol = cfg.tol;

    ordered_json body;
    std::string backend_used = cfg.backend;
    try {
        if (cfg.backend == "rational") {
            try {
                body = detail::classification_json(classify(to_jet<Rational>(expr, order), opt));
            } catch (const exact_error&) {
                backend_used = "float";
                body = detail::classification_json(classify(to_jet<double>(expr, order, cfg.tol), opt));
            }
        } else {
            body = detail::classification_json(classify(to_jet<double>(expr, order, cfg.tol), opt));
        }
    } catch (const domain_error& e) {
        return {2, detail::error_json("precondition", e.what()), ""};
    }

    ordered_json o = ordered_json::object();
    o["command"] = "classify";
    o["x"] = x_expr;
    o["y"] = y_expr;
    o["order"] = order;
    o["backend_used"] = backend_used;
    for (auto& [k, v] : body.items()) o[k] = v;
    return {0, o, ""};
}

namespace detail {

template <class S>
ordered_json chain_json(const EvoluteChain<S>& chain) {
    ordered_json levels = ordered_json::array();
    for (std::size_t i = 0; i < chain.levels.size(); ++i) {
        const auto& L = chain.levels[i];
        ordered_json o = ordered_json::object();
        o["level"] = i;
        o["x"] = jet_coeffs_json(L.curve.x);
        o["y"] = jet_coeffs_json(L.curve.y);
        o["singular_at_0"] = L.singular_at_0;
        o["trusted_order"] = L.trusted_order;
        levels.push_back(o);
    }
    return levels;
}

// Verdicts of the negative criterion for n = 2..m+1, read off the chain:
// "true" means levels 1..n-1 are all singular at 0, so the curve is not
// A-equivalent to the (n, n+1)-cusp.
template <class S>
ordered_json negative_criterion_json(const EvoluteChain<S>& chain) {
    ordered_json o = ordered_json::object();
    const int m = static_cast<int>(chain.levels.size()) - 1;
    bool all_singular = true;
    for (int n = 2; n <= m + 1; ++n) {
        all_singular = all_singular && chain.levels[static_cast<std::size_t>(n - 1)].singular_at_0;
        o[std::to_string(n)] = all_singular;
    }
    return o;
}

} // namespace detail

inline CommandResult cmd_evolute(const std::string& x_expr, const std::string& y_expr, int m,
                                 const RunConfig& cfg) {
    const int order = cfg.order > 0 ? cfg.order : 24;
    CommandResult res;
    if (!detail::validate_config(cfg, order, res)) return res;
    if (m < 0) return {1, detail::error_json("usage", "evolute level must be nonnegative"), ""};

    CurveExpr expr;
    try {
        expr = CurveExpr::parse(x_expr, y_expr);
    } catch (const parse_error& e) {
        return detail::parse_failure(e);
    }

    ordered_json o = ordered_json::object();
    o["command"] = "evolute";
    o["x"] = x_expr;
    o["y"] = y_expr;
    o["order"] = order;
    o["m"] = m;

    try {
        bool singular0 = false;
        std::string backend_used = cfg.backend;
        ordered_json levels, neg;
        if (cfg.backend == "rational") {
            try {
                auto c = to_jet<Rational>(expr, order);
                auto chain = evolute_chain(c, m);
                levels = detail::chain_json(chain);
                neg = detail::negative_criterion_json(chain);
                singular0 = chain.levels[0].singular_at_0;
            } catch (const exact_error&) {
                backend_used = "float";
            }
        }
        if (backend_used == "float") {
            auto c = to_jet<double>(expr, order, cfg.tol);
            auto chain = evolute_chain(c, m, cfg.tol);
            levels = detail::chain_json(chain);
            neg = detail::negative_criterion_json(chain);
            singular0 = chain.levels[0].singular_at_0;
        }
        o["backend_used"] = backend_used;
        o["levels"] = levels;
        if (singular0 && m >= 1) o["negative_criterion"] = neg;
    } catch (const domain_error& e) {
        return {2, detail::error_json("precondition", e.what()), ""};
    }
    return {0, o, ""};
}

inline CommandResult cmd_plot(const std::string& x_expr, const std::string& y_expr, int m,
                              const RunConfig& cfg) {
    const int order = cfg.order > 0 ? cfg.order : 24;
    CommandResult res;
    if (!detail::validate_config(cfg, order, res)) return res;
    if (m < 0) return {1, detail::error_json("usage", "evolute level must be nonnegative"), ""};
    if (!(cfg.t_min < cfg.t_max)) return {1, detail::error_json("usage", "range must satisfy t_min < t_max"), ""};

    CurveExpr expr;
    try {
        expr = CurveExpr::parse(x_expr, y_expr);
    } catch (const parse_error& e) {
        return detail::parse_failure(e);
    }

    const bool polynomial = is_polynomial(expr);
    std::vector<std::string> warnings;
    SvgPlot plot;

    std::vector<std::vector<std::array<double, 2>>> pts(static_cast<std::size_t>(m) + 1);
    std::vector<std::optional<std::array<double, 2>>> markers(static_cast<std::size_t>(m) + 1);

    // The curve itself, from the exact expression.
    for (int i = 0; i < cfg.samples; ++i) {
        const double t =
            cfg.t_min + (cfg.t_max - cfg.t_min) * static_cast<double>(i) / static_cast<double>(cfg.samples - 1);
        pts[0].push_back({eval_num(*expr.x, t), eval_num(*expr.y, t)});
    }
    markers[0] = {eval_num(*expr.x, 0.0), eval_num(*expr.y, 0.0)};

    if (m >= 1) {
        // Precondition check and markers through the jet chain at 0.
        try {
            bool exact_ok = false;
            if (cfg.backend == "rational") {
                try {
                    auto chain = evolute_chain(to_jet<Rational>(expr, order), m);
                    for (int i = 1; i <= m; ++i) {
                        const auto& cv = chain.levels[static_cast<std::size_t>(i)].curve;
                        markers[static_cast<std::size_t>(i)] = {cv.x.coeff(0).to_double(), cv.y.coeff(0).to_double()};
                    }
                    exact_ok = true;
                } catch (const exact_error&) {
                }
            }
            if (!exact_ok) {
                auto chain = evolute_chain(to_jet<double>(expr, order, cfg.tol), m, cfg.tol);
                for (int i = 1; i <= m; ++i) {
                    const auto& cv = chain.levels[static_cast<std::size_t>(i)].curve;
                    markers[static_cast<std::size_t>(i)] = {cv.x.coeff(0), cv.y.coeff(0)};
                }
                if (!polynomial) {
                    // Non-polynomial input: the evolutes are drawn from the
                    // truncated jets at 0, valid only near the origin.
                    warnings.push_back("evolute curves use truncated jets at t = 0; accuracy degrades away from 0");
                    for (int i = 0; i < cfg.samples; ++i) {
                        const double t = cfg.t_min + (cfg.t_max - cfg.t_min) * static_cast<double>(i) /
                                                         static_cast<double>(cfg.samples - 1);
                        for (int lvl = 1; lvl <= m; ++lvl) {
                            auto [px, py] = eval_point(chain.levels[static_cast<std::size_t>(lvl)].curve, t);
                            pts[static_cast<std::size_t>(lvl)].push_back({px, py});
                        }
                    }
                }
            } else if (!polynomial) {
                auto chain = evolute_chain(to_jet<Rational>(expr, order), m);
                warnings.push_back("evolute curves use truncated jets at t = 0; accuracy degrades away from 0");
                for (int i = 0; i < cfg.samples; ++i) {
                    const double t = cfg.t_min + (cfg.t_max - cfg.t_min) * static_cast<double>(i) /
                                                     static_cast<double>(cfg.samples - 1);
                    for (int lvl = 1; lvl <= m; ++lvl) {
                        auto [px, py] = eval_point(chain.levels[static_cast<std::size_t>(lvl)].curve, t);
                        pts[static_cast<std::size_t>(lvl)].push_back({px, py});
                    }
                }
            }
        } catch (const domain_error& e) {
            return {2, detail::error_json("precondition", e.what()), ""};
        }

        if (polynomial) {
            // Closed-form resampling: expand the curve about each sample
            // parameter and read the evolute values off the local chain.
            // Evolute values are the constant terms, which the recurrences
            // compute exactly, so a short expansion suffices; keeping it
            // short also keeps the coefficient growth of expansions near a
            // singular parameter inside the float tolerance budget. A
            // singular sample (vanishing tangent, valuation k) needs k more
            // orders to survive the frame reduction.
            int skipped = 0;
            double prev_ell = 0.0;
            bool have_prev = false, crossed = false;
            for (int i = 0; i < cfg.samples; ++i) {
                const double t = cfg.t_min + (cfg.t_max - cfg.t_min) * static_cast<double>(i) /
                                                 static_cast<double>(cfg.samples - 1);
                try {
                    auto local = to_jet_at(expr, t, m + 4, cfg.tol);
                    auto d = derivative(local);
                    auto kx = valuation(d.x, cfg.tol);
                    auto ky = valuation(d.y, cfg.tol);
                    const int k = std::min(kx.value_or(m + 4), ky.value_or(m + 4));
                    if (k > 0) local = to_jet_at(expr, t, m + 4 + k, cfg.tol);
                    auto chain = evolute_chain(local, m, cfg.tol);
                    const double ell0 = chain.levels[0].pair.ell.coeff(0);
                    if (have_prev && ((prev_ell < 0) != (ell0 < 0))) crossed = true;
                    prev_ell = ell0;
                    have_prev = true;
                    for (int lvl = 1; lvl <= m; ++lvl) {
                        const auto& cv = chain.levels[static_cast<std::size_t>(lvl)].curve;
                        pts[static_cast<std::size_t>(lvl)].push_back({cv.x.coeff(0), cv.y.coeff(0)});
                    }
                } catch (const domain_error&) {
                    ++skipped;
                }
            }
            if (crossed) warnings.push_back("ell changes sign inside the plot range: evolutes cross an inflection");
            if (skipped > 0)
                warnings.push_back(std::to_string(skipped) +
                                   " sample(s) skipped (evolute undefined or ill-conditioned there)");
        }
    }

    for (int lvl = 0; lvl <= m; ++lvl) {
        SvgPlot::Series s;
        s.label = lvl == 0 ? "gamma" : "Ev^" + std::to_string(lvl);
        s.color = SvgPlot::color(lvl);
        s.points = std::move(pts[static_cast<std::size_t>(lvl)]);
        s.marker = markers[static_cast<std::size_t>(lvl)];
        plot.add_series(std::move(s));
    }
    for (const auto& w : warnings) plot.add_comment(w);

    ordered_json o = ordered_json::object();
    o["command"] = "plot";
    o["x"] = x_expr;
    o["y"] = y_expr;
    o["m"] = m;
    o["out"] = cfg.out_path;
    o["samples"] = cfg.samples;
    o["range"] = ordered_json::array({cfg.t_min, cfg.t_max});
    o["polynomial"] = polynomial;
    o["warnings"] = warnings;
    return {0, o, plot.render()};
}

inline CommandResult cmd_property(const RunConfig& cfg) {
    if (cfg.trials < 1) return {1, detail::error_json("usage", "trials must be at least 1"), ""};

    std::vector<SuiteResult> suites;
    suites.push_back(suite_class_reparam(cfg.trials, cfg.seed + 11));
    suites.push_back(suite_class_plane_map(cfg.trials, cfg.seed + 23));
    suites.push_back(suite_numerator_sign(cfg.trials, cfg.seed + 37));
    suites.push_back(suite_kappa_q_reparam(cfg.trials, cfg.seed + 41));
    suites.push_back(suite_normal_form_T(cfg.trials, cfg.seed + 53, cfg.corrupt77 ? -76 : -77));

    bool all_pass = true;
    ordered_json so = ordered_json::object();
    for (const auto& s : suites) {
        ordered_json e = ordered_json::object();
        e["pass"] = s.pass;
        e["fail"] = s.fail;
        if (!s.first_failure.empty()) e["first_failure"] = s.first_failure;
        so[s.name] = e;
        all_pass = all_pass && s.fail == 0;
    }

    ordered_json o = ordered_json::object();
    o["command"] = "property";
    o["seed"] = cfg.seed;
    o["trials"] = cfg.trials;
    if (cfg.corrupt77) o["corrupt77"] = true;
    o["suites"] = so;
    o["all_pass"] = all_pass;
    return {all_pass ? 0 : 3, o, ""};
}

} // namespace cusp
