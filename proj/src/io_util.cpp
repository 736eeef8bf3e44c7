#include "manakov/io_util.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "manakov/errors.hpp"

namespace manakov {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    if (s.empty()) throw InvalidInputError("empty numeric field");
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    double v = 0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end)
        throw InvalidInputError("bad numeric field '" + s + "'");
    return v;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw Error("rename " + tmp.string() + " -> " + path + ": " + ec.message());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = line.find(',', pos);
        std::string tok =
            line.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        while (!tok.empty() && (tok.back() == '\r' || tok.back() == ' ')) tok.pop_back();
        out.push_back(tok);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace manakov
