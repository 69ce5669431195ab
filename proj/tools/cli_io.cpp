#include "cli_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace oscnet::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* who) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(who) + ": cannot parse integer '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size())
            throw std::invalid_argument(std::string(who) + ": trailing characters in '" + item + "'");
        values.push_back(value);
    }
    if (values.empty())
        throw std::invalid_argument(std::string(who) + ": empty list");
    return values;
}

void append_matrix_rows(std::string& out, const Eigen::MatrixXcd& m, bool imaginary,
                        const std::string& pad) {
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        out += pad + "[";
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            if (k > 0) out += ", ";
            out += format_double(imaginary ? m(j, k).imag() : m(j, k).real());
        }
        out += j + 1 < m.rows() ? "],\n" : "]\n";
    }
}

std::string matrix_json_block(const Eigen::MatrixXcd& m, const std::string& pad) {
    std::string out = "{\n";
    out += pad + "  \"re\": [\n";
    append_matrix_rows(out, m, false, pad + "    ");
    out += pad + "  ],\n" + pad + "  \"im\": [\n";
    append_matrix_rows(out, m, true, pad + "    ");
    out += pad + "  ]\n" + pad + "}";
    return out;
}

Eigen::MatrixXcd matrix_from_parts(const nlohmann::json& re, const nlohmann::json& im,
                                   const char* who) {
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
        throw std::invalid_argument(std::string(who) + ": malformed re/im arrays");
    const auto rows = static_cast<Eigen::Index>(re.size());
    Eigen::MatrixXcd m(rows, rows);
    for (Eigen::Index j = 0; j < rows; ++j) {
        const auto& re_row = re.at(static_cast<size_t>(j));
        const auto& im_row = im.at(static_cast<size_t>(j));
        if (re_row.size() != static_cast<size_t>(rows) || im_row.size() != static_cast<size_t>(rows))
            throw std::invalid_argument(std::string(who) + ": matrix is not square");
        for (Eigen::Index k = 0; k < rows; ++k)
            m(j, k) = Complex(re_row.at(static_cast<size_t>(k)).get<double>(),
                              im_row.at(static_cast<size_t>(k)).get<double>());
    }
    return m;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
    return std::string(buffer, result.ptr);
}

std::vector<int> parse_m_list(const std::string& text, int s) {
    auto values = parse_int_list(text, "--m");
    if (values.size() == 1 && s > 1)
        values.assign(static_cast<size_t>(s), values[0]);
    if (static_cast<int>(values.size()) != s)
        throw std::invalid_argument("--m: expected 1 or " + std::to_string(s) + " entries, got " +
                                    std::to_string(values.size()));
    return values;
}

PermutationMatrix parse_permutation(const std::string& text) {
    auto image = parse_int_list(text, "--perm");
    for (int& row : image) row -= 1;  // CLI speaks 1-based
    return PermutationMatrix::from_image(std::move(image));
}

std::string coupling_to_json(const CouplingMatrix& lambda) {
    std::string out = "{\n";
    out += "  \"s\": " + std::to_string(lambda.size()) + ",\n";
    out += "  \"tau\": " + format_double(lambda.tau) + ",\n";
    out += "  \"m\": [";
    for (size_t i = 0; i < lambda.m.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(lambda.m[i]);
    }
    out += "],\n  \"re\": [\n";
    append_matrix_rows(out, lambda.lambda, false, "    ");
    out += "  ],\n  \"im\": [\n";
    append_matrix_rows(out, lambda.lambda, true, "    ");
    out += "  ]\n}\n";
    return out;
}

CouplingMatrix coupling_from_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("coupling JSON: ") + err.what());
    }
    if (!parsed.contains("s") || !parsed.contains("re") || !parsed.contains("im"))
        throw std::invalid_argument("coupling JSON: missing required keys s/re/im");

    CouplingMatrix lambda;
    lambda.lambda = matrix_from_parts(parsed.at("re"), parsed.at("im"), "coupling JSON");
    if (parsed.at("s").get<int>() != lambda.size())
        throw std::invalid_argument("coupling JSON: s does not match the matrix dimension");
    lambda.tau = parsed.value("tau", 0.0);
    if (parsed.contains("m"))
        lambda.m = parsed.at("m").get<std::vector<int>>();
    return lambda;
}

std::string coupling_to_csv(const CouplingMatrix& lambda) {
    std::string out = "j,k,re,im\n";
    for (int j = 0; j < lambda.size(); ++j)
        for (int k = 0; k < lambda.size(); ++k)
            out += std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                   format_double(lambda.lambda(j, k).real()) + "," +
                   format_double(lambda.lambda(j, k).imag()) + "\n";
    return out;
}

std::string propagator_to_json(const Propagator& prop) {
    std::string out = "{\n";
    out += "  \"s\": " + std::to_string(prop.s) + ",\n";
    out += "  \"t\": " + format_double(prop.t) + ",\n";
    out += "  \"mu\": " + matrix_json_block(prop.mu, "  ") + ",\n";
    out += "  \"nu\": " + matrix_json_block(prop.nu, "  ") + "\n";
    out += "}\n";
    return out;
}

std::string propagator_to_csv(const Propagator& prop) {
    std::string out = "j,k,mu_re,mu_im,nu_re,nu_im\n";
    for (int j = 0; j < prop.s; ++j)
        for (int k = 0; k < prop.s; ++k)
            out += std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                   format_double(prop.mu(j, k).real()) + "," + format_double(prop.mu(j, k).imag()) +
                   "," + format_double(prop.nu(j, k).real()) + "," +
                   format_double(prop.nu(j, k).imag()) + "\n";
    return out;
}

std::string gseries_to_csv(const GSeries& series) {
    std::string out = "t_over_tau,g\n";
    for (const GPoint& point : series.points)
        out += format_double(point.t / series.spec.tau) + "," + format_double(point.g) + "\n";
    return out;
}

}  // namespace oscnet::cli
