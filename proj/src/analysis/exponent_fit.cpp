#include "masolve/analysis/exponent_fit.hpp"

#include <algorithm>
#include <cmath>

#include "masolve/core/errors.hpp"

namespace masolve::analysis {

std::string to_string(FitModel m) {
    switch (m) {
        case FitModel::power: return "power";
        case FitModel::log_lipschitz: return "loglip";
        case FitModel::gradient_log: return "gradlog";
    }
    return "?";
}

FitModel fit_model_from_string(const std::string& s) {
    if (s == "power") return FitModel::power;
    if (s == "loglip" || s == "log-lipschitz") return FitModel::log_lipschitz;
    if (s == "gradlog" || s == "gradient-log") return FitModel::gradient_log;
    throw ValidationError("unknown fit model: " + s);
}

double ExponentFit::predict(double d) const {
    switch (model) {
        case FitModel::power: return amplitude * std::pow(d, beta);
        case FitModel::log_lipschitz: return d * (intercept + amplitude * std::fabs(std::log(d)));
        case FitModel::gradient_log: return intercept + amplitude * std::fabs(std::log(d));
    }
    return 0.0;
}

namespace {

struct LinFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
    std::vector<double> residuals;
};

LinFit linear_fit(const std::vector<double>& t, const std::vector<double>& y) {
    const std::size_t m = t.size();
    double st = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        st += t[i];
        sy += y[i];
    }
    const double mt = st / m, my = sy / m;
    double stt = 0.0, sty = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        stt += (t[i] - mt) * (t[i] - mt);
        sty += (t[i] - mt) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LinFit f;
    f.slope = stt > 0.0 ? sty / stt : 0.0;
    f.intercept = my - f.slope * mt;
    double ss_res = 0.0;
    f.residuals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        f.residuals[i] = y[i] - (f.intercept + f.slope * t[i]);
        ss_res += f.residuals[i] * f.residuals[i];
    }
    f.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return f;
}

ExponentFit fit_once(const std::vector<double>& d, const std::vector<double>& v, FitModel model) {
    const std::size_t m = d.size();
    std::vector<double> t(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
        switch (model) {
            case FitModel::power:
                t[i] = std::log(d[i]);
                y[i] = std::log(v[i]);
                break;
            case FitModel::log_lipschitz:
                t[i] = std::fabs(std::log(d[i]));
                y[i] = v[i] / d[i];
                break;
            case FitModel::gradient_log:
                t[i] = std::fabs(std::log(d[i]));
                y[i] = v[i];
                break;
        }
    }
    const LinFit lin = linear_fit(t, y);
    ExponentFit fit;
    fit.model = model;
    fit.r2 = lin.r2;
    fit.residuals = lin.residuals;
    switch (model) {
        case FitModel::power:
            fit.beta = lin.slope;
            fit.amplitude = std::exp(lin.intercept);
            break;
        case FitModel::log_lipschitz:
        case FitModel::gradient_log:
            fit.amplitude = lin.slope;
            fit.intercept = lin.intercept;
            break;
    }
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        fit.samples.emplace_back(d[i], v[i]);
        const double pred = fit.predict(d[i]);
        const double rl = (pred > 0.0 && v[i] > 0.0) ? std::log(pred / v[i]) : 1e3;
        ss += rl * rl;
    }
    fit.rms_log_residual = std::sqrt(ss / m);
    return fit;
}

}  // namespace

ExponentFit fit_exponent(std::span<const double> d_in, std::span<const double> v_in,
                         FitModel model, bool pre_asymptotic_guard) {
    if (d_in.size() != v_in.size()) throw ParameterError("fit_exponent: size mismatch");
    if (d_in.size() < 4) throw ParameterError("fit_exponent: needs at least 4 samples");
    std::vector<double> d(d_in.begin(), d_in.end());
    std::vector<double> v(v_in.begin(), v_in.end());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!(d[i] > 0.0)) throw ParameterError("fit_exponent: distances must be positive");
        if (i + 1 < d.size() && !(d[i] > d[i + 1])) {
            throw ParameterError("fit_exponent: distances must be strictly decreasing");
        }
        if (model != FitModel::gradient_log && !(v[i] > 0.0)) {
            throw ParameterError("fit_exponent: values must be positive");
        }
        if (model == FitModel::gradient_log) v[i] = std::fabs(v[i]);
    }

    ExponentFit fit = fit_once(d, v, model);
    if (pre_asymptotic_guard && d.size() >= 5) {
        std::vector<double> mag(fit.residuals.size());
        for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::fabs(fit.residuals[i]);
        std::vector<double> sorted = mag;
        std::sort(sorted.begin(), sorted.end());
        const double med = sorted[sorted.size() / 2];
        if (med > 0.0 && mag.front() > 3.0 * med) {
            d.erase(d.begin());
            v.erase(v.begin());
            fit = fit_once(d, v, model);
            fit.dropped_head = true;
        }
    }
    return fit;
}

}  // namespace masolve::analysis
