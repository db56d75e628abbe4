#include "ergo/edge_list_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ergo/errors.hpp"

namespace ergo {

namespace {

// Reads one nonempty line, rejecting streams that end early.
std::string next_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw input_error(std::string("edge list truncated: expected ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

void parse_two_ints(const std::string& line, long long& a, long long& b, const char* what) {
    std::istringstream s(line);
    std::string tail;
    if (!(s >> a >> b) || (s >> tail))
        throw input_error(std::string("malformed ") + what + " line: \"" + line + "\"");
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    long long n = 0;
    long long e = 0;
    parse_two_ints(next_line(in, "header"), n, e, "header");
    if (n < 0 || e < 0) throw input_error("edge list header has negative counts");
    if (n > 50'000'000) throw capacity_error("vertex count too large");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < e; ++i) {
        long long u = 0;
        long long v = 0;
        parse_two_ints(next_line(in, "edge"), u, v, "edge");
        if (u >= v) throw input_error("edge list requires u < v on every edge line");
        if (u < 0 || v >= n) throw input_error("edge endpoint out of range");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    while (std::getline(in, rest)) {
        if (!rest.empty() && rest.back() == '\r') rest.pop_back();
        if (!rest.empty()) throw input_error("trailing data after declared edges");
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path + " for reading");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
    out.flush();
    if (!out) throw io_error("write failed for " + path);
}

}  // namespace ergo
