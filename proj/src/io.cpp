#include "monogamy/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monogamy {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double rounded_number(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

std::string figure_csv(const FigureTable& table) {
    std::string out = "beta,ylm,fei,tao,new,truth\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

PureState read_amplitudes(std::istream& in) {
    std::vector<Complex> amps;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string::size_type hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double re, im;
        if (fields >> re) {
            if (!(fields >> im))
                throw std::invalid_argument("amplitude line " + std::to_string(line_no) +
                                            " needs two values (re im)");
            std::string extra;
            if (fields >> extra)
                throw std::invalid_argument("amplitude line " + std::to_string(line_no) +
                                            " has trailing content");
            amps.emplace_back(re, im);
        } else if (!fields.eof()) {
            throw std::invalid_argument("amplitude line " + std::to_string(line_no) +
                                        " is not numeric");
        }
    }

    int n = 0;
    while ((1L << n) < static_cast<long>(amps.size()) && n <= 5) ++n;
    if (amps.empty() || (1L << n) != static_cast<long>(amps.size()) || n < 1 || n > 5)
        throw std::invalid_argument("amplitude count must be 2^n for 1 <= n <= 5");

    ComplexVector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
    double norm2 = v.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-6)
        throw std::invalid_argument("amplitudes are not normalized");
    v /= std::sqrt(norm2);
    return PureState(n, std::move(v));
}

}  // namespace monogamy
