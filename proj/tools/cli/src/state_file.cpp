#include "bient_cli/state_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "json.hpp"

namespace bient::cli {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return fmt::format("line {}, column {}", line, column);
}

double number_at(const json& node, const std::string& path) {
    if (!node.is_number()) throw ParseError(path, "expected a number");
    const double x = node.get<double>();
    if (!std::isfinite(x)) throw ParseError(path, "number is not finite");
    return x;
}

} // namespace

PureState parse_state_file(std::string_view text, const ParseOptions& options) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points one past the offending character
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw ParseError(line_column(text, at), "syntax error");
    }

    if (!doc.is_object()) throw ParseError("<root>", "expected a JSON object");
    for (const auto& item : doc.items()) {
        if (item.key() != "dims" && item.key() != "amplitudes") {
            throw ParseError(item.key(), "unknown field");
        }
    }
    if (!doc.contains("dims")) throw ParseError("dims", "missing field");
    if (!doc.contains("amplitudes")) throw ParseError("amplitudes", "missing field");

    const json& dims = doc["dims"];
    if (!dims.is_array() || dims.size() != 2) throw ParseError("dims", "expected [d_A, d_B]");
    for (std::size_t k = 0; k < 2; ++k) {
        if (!dims[k].is_number_integer() && !dims[k].is_number_unsigned()) {
            throw ParseError(fmt::format("dims[{}]", k), "expected an integer");
        }
    }
    const auto d_a = dims[0].get<long long>();
    const auto d_b = dims[1].get<long long>();
    if (d_a != 2 || (d_b != 2 && d_b != 3)) {
        throw UnsupportedDimensionError(
            fmt::format("state file: dims [{}, {}] unsupported; expected [2, 2] or [2, 3]", d_a, d_b));
    }
    const auto db = static_cast<std::size_t>(d_b);

    const json& amps = doc["amplitudes"];
    if (!amps.is_array()) throw ParseError("amplitudes", "expected an array of [re, im] pairs");
    if (amps.size() != 2 * db) {
        throw ParseError("amplitudes", fmt::format("expected {} entries, got {}", 2 * db, amps.size()));
    }
    std::vector<Complex> values;
    values.reserve(amps.size());
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const std::string path = fmt::format("amplitudes[{}]", k);
        const json& pair = amps[k];
        if (!pair.is_array() || pair.size() != 2) throw ParseError(path, "expected [re, im]");
        values.emplace_back(number_at(pair[0], path + "[0]"), number_at(pair[1], path + "[1]"));
    }

    if (options.renormalize) {
        double n2 = 0.0;
        for (const Complex& z : values) n2 += std::norm(z);
        if (!(n2 > 0.0)) throw ValidationError("state file: cannot renormalize the zero vector");
        const double inv = 1.0 / std::sqrt(n2);
        for (Complex& z : values) z *= inv;
    }
    return PureState::from_amplitudes(db, values);
}

PureState load_state_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open state file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_file(buffer.str(), options);
}

std::string render_state_file(const PureState& psi) {
    std::string out = fmt::format("{{\n  \"dims\": [2, {}],\n  \"amplitudes\": [\n", psi.dim_b());
    const auto amps = psi.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        out += fmt::format("    [{:.17g}, {:.17g}]{}\n", amps[k].real(), amps[k].imag(),
                           k + 1 < amps.size() ? "," : "");
    }
    out += "  ]\n}\n";
    return out;
}

} // namespace bient::cli
