#include "kuramoto/text.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace kuramoto {

std::string fmt_g(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

std::string fmt_f3(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

std::string join_csv(const std::vector<double>& values, int digits) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += fmt_g(values[i], digits);
    }
    return out;
}

std::vector<double> parse_csv_doubles(const std::string& line) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        std::string token = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        // trim
        std::size_t b = token.find_first_not_of(" \t\r\n");
        std::size_t e = token.find_last_not_of(" \t\r\n");
        if (b == std::string::npos) throw std::invalid_argument("csv: empty field");
        token = token.substr(b, e - b + 1);
        char* end = nullptr;
        double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size())
            throw std::invalid_argument("csv: bad number '" + token + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<double> read_csv_line_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        return parse_csv_doubles(line);
    }
    throw std::invalid_argument("file has no data line: " + path);
}

} // namespace kuramoto
