#include "binframe/text_format.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "binframe/error.hpp"

namespace binframe {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

Word parse_number(std::string_view token, std::string_view what) {
    if (token.empty()) {
        throw Error(ErrorKind::Parse, "empty " + std::string(what));
    }
    Word value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorKind::OutOfRange, std::string(what) + " '" + std::string(token) + "' too large");
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::Parse, "malformed " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

Frame parse_frame(std::string_view text) {
    const std::string s = strip_spaces(text);
    const auto semi = s.find(';');
    if (semi == std::string::npos) {
        throw Error(ErrorKind::Parse, "frame literal needs the form 'n; v1,...,vk'");
    }
    const Word n = parse_number(std::string_view(s).substr(0, semi), "dimension");
    if (n < 1 || n > static_cast<Word>(kMaxDim)) {
        throw Error(ErrorKind::OutOfRange, "dimension " + std::to_string(n) + " outside [1, 64]");
    }
    const int dim = static_cast<int>(n);

    std::vector<Word> encodings;
    std::string_view rest = std::string_view(s).substr(semi + 1);
    if (!rest.empty()) {
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view token = rest.substr(0, comma);
            const Word v = parse_number(token, "vector encoding");
            if ((v & ~low_mask(dim)) != 0) {
                throw Error(ErrorKind::OutOfRange,
                            "encoding " + std::to_string(v) + " does not fit in dimension " + std::to_string(dim));
            }
            encodings.push_back(v);
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
    }
    return Frame::from_encodings(dim, encodings);
}

std::string format_encodings(const Frame& f) {
    std::string out;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (j != 0) {
            out.push_back(',');
        }
        out += std::to_string(f[j].encoding());
    }
    return out;
}

std::string format_frame(const Frame& f) {
    std::string out = std::to_string(f.dim()) + ";";
    if (!f.empty()) {
        out += " " + format_encodings(f);
    }
    return out;
}

std::string format_matrix(const BinMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j != 0) {
                out.push_back(' ');
            }
            out.push_back(m.at(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace binframe
