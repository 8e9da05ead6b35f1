#include "chanent/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace chanent {

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

json complex_to_json(const Complex& z) {
    return json::array({round_sig(z.real()), round_sig(z.imag())});
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Complex complex_from_json(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw ValidationError("complex entries must be numbers or [re, im] pairs");
}

const json& unwrap_channel(const json& j) {
    if (j.is_object() && j.contains("channel") && !j.contains("kind"))
        return j.at("channel");
    return j;
}

} // namespace

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("matrix must be a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].is_array() ? j[0].size() : 0);
    if (cols == 0) throw ValidationError("matrix rows must be non-empty arrays");
    std::vector<Complex> entries;
    entries.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ValidationError("matrix rows must have equal length");
        for (const auto& e : row) entries.push_back(complex_from_json(e));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

json stochastic_to_json(const StochasticMatrix& s) {
    json rows = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < s.dim(); ++j) row.push_back(round_sig(s(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

StochasticMatrix stochastic_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("stochastic matrix must be an array of rows");
    const int n = static_cast<int>(j.size());
    std::vector<double> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ValidationError("stochastic matrix must be square");
        for (const auto& e : row) {
            if (!e.is_number()) throw ValidationError("stochastic entries must be real numbers");
            entries.push_back(e.get<double>());
        }
    }
    return StochasticMatrix(n, std::move(entries));
}

json channel_to_json(const Channel& t) {
    json out;
    out["dim"] = t.dim();
    switch (t.kind()) {
        case Channel::Kind::superoperator:
            out["kind"] = "superop";
            out["data"] = matrix_to_json(t.superoperator_matrix());
            break;
        case Channel::Kind::kraus: {
            out["kind"] = "kraus";
            json ops = json::array();
            for (const auto& a : t.kraus_ops()) ops.push_back(matrix_to_json(a));
            out["data"] = std::move(ops);
            break;
        }
        case Channel::Kind::stochastic:
            out["kind"] = "stochastic";
            out["data"] = stochastic_to_json(t.stochastic());
            break;
        case Channel::Kind::state:
            out["kind"] = "state";
            out["data"] = matrix_to_json(t.state_density().matrix());
            break;
    }
    return out;
}

Channel channel_from_json(const json& spec_in) {
    const json& spec = unwrap_channel(spec_in);
    if (!spec.is_object()) throw ValidationError("channel spec must be a JSON object");
    if (!spec.contains("kind") || !spec["kind"].is_string())
        throw ValidationError("channel spec needs a string \"kind\"");
    if (!spec.contains("dim") || !spec["dim"].is_number_integer())
        throw ValidationError("channel spec needs an integer \"dim\"");
    if (!spec.contains("data")) throw ValidationError("channel spec needs \"data\"");
    const std::string kind = spec["kind"].get<std::string>();
    const int n = spec["dim"].get<int>();
    if (n <= 0) throw ValidationError("channel dim must be positive");
    const json& data = spec["data"];

    if (kind == "superop") {
        auto m = matrix_from_json(data);
        if (m.rows() != n * n || m.cols() != n * n)
            throw ValidationError("superop data must be dim^2 x dim^2");
        return Channel::superoperator(n, std::move(m));
    }
    if (kind == "kraus") {
        if (!data.is_array() || data.empty())
            throw ValidationError("kraus data must be a non-empty list of matrices");
        std::vector<ComplexMatrix> ops;
        for (const auto& jm : data) {
            auto a = matrix_from_json(jm);
            if (a.rows() != n || a.cols() != n)
                throw ValidationError("kraus operators must be dim x dim");
            ops.push_back(std::move(a));
        }
        return Channel::kraus(n, std::move(ops));
    }
    if (kind == "stochastic") {
        auto s = stochastic_from_json(data);
        if (s.dim() != n) throw ValidationError("stochastic data size must match dim");
        return Channel::classical(std::move(s));
    }
    if (kind == "state") {
        auto theta = matrix_from_json(data);
        if (theta.rows() != n || theta.cols() != n)
            throw ValidationError("state data must be dim x dim");
        return Channel::state(DensityOperator(std::move(theta)));
    }
    throw ValidationError("unknown channel kind \"" + kind + "\"");
}

Channel channel_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return channel_from_json(j);
}

json rho_to_json(const RepresentativeOperator& rho) {
    json out;
    out["dim"] = rho.dim;
    out["matrix"] = matrix_to_json(rho.matrix);
    json spec = json::array();
    for (double lam : rho.spectrum.eigenvalues) spec.push_back(round_sig(lam));
    out["spectrum"] = std::move(spec);
    out["trace"] = round_sig(rho.matrix.trace().real());
    out["min_eigenvalue"] = round_sig(rho.min_eigenvalue);
    return out;
}

json properties_to_json(const PropertyReport& rep) {
    json out;
    out["a"] = rep.a;
    out["b"] = rep.b;
    out["c"] = rep.c;
    out["b_literal"] = rep.b_literal;
    out["elements_real"] = rep.elements_real;
    out["c_max_deviation"] = round_sig(rep.c_max_deviation);
    return out;
}

json entropy_report_to_json(const EntropyReport& rep, bool bits) {
    const double unit = bits ? M_LN2 : 1.0;
    json out;
    out["h_channel"] = round_sig(rep.h_channel.nats / unit);
    out["d_choi"] = round_sig(rep.d_choi.nats / unit);
    out["gap"] = round_sig(rep.gap / unit);
    out["unit"] = bits ? "bits" : "nats";
    json witness = json::array();
    for (size_t k = 0; k < rep.witness.components.size(); ++k) {
        json item;
        item["assignment"] = rep.witness.components[k].assignment;
        item["weight"] = round_sig(rep.witness.weights[k]);
        witness.push_back(std::move(item));
    }
    out["witness"] = std::move(witness);
    return out;
}

} // namespace chanent
