#include "degseq/degree_sequence.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "degseq/error.hpp"

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
    const auto n = static_cast<Degree>(degrees_.size());
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        const Degree d = degrees_[i];
        if (d < 0 || d > n - 1) {
            throw Error(ErrorCode::degree_out_of_range,
                        "vertex " + std::to_string(i) + " has degree " + std::to_string(d) +
                            " outside [0, " + std::to_string(n - 1) + "]");
        }
        sum_ += d;
    }
}

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

} // namespace

std::vector<Degree> parse_degrees(std::string_view text) {
    std::vector<Degree> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !is_space(text[end]) && text[end] != '#') ++end;
        const std::string_view token = text.substr(i, end - i);

        Degree value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw Error(ErrorCode::malformed_token, "token " + std::to_string(out.size()) + " ('" +
                                                        std::string(token) + "') is not an integer");
        }
        if (value < 0) {
            throw Error(ErrorCode::degree_out_of_range,
                        "vertex " + std::to_string(out.size()) + " has negative degree " +
                            std::to_string(value));
        }
        out.push_back(value);
        i = end;
    }
    if (out.empty()) throw Error(ErrorCode::empty_input, "no degree values found");
    return out;
}

DegreeSequence parse_sequence(std::string_view text) {
    return DegreeSequence(parse_degrees(text));
}

std::string format_sequence(std::span<const Degree> degrees) {
    std::string out;
    out.reserve(degrees.size() * 4);
    char buf[24];
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i != 0) out.push_back(' ');
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, degrees[i]);
        out.append(buf, ptr);
    }
    out.push_back('\n');
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::io, "write failed for " + path.string());
}

} // namespace degseq
