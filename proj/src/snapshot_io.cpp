#include "maxfock/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "maxfock/errors.hpp"

namespace maxfock {
namespace {

void put_f64(std::ostream& os, double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((bits >> (8 * b)) & 0xFF);
    os.write(bytes, 8);
}

double get_f64(std::istream& is) {
    unsigned char bytes[8];
    if (!is.read(reinterpret_cast<char*>(bytes), 8)) throw FormatError("snapshot payload truncated");
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
    return std::bit_cast<double>(bits);
}

void put_field(std::ostream& os, const VectorFieldC& f, std::size_t p) {
    for (int a = 0; a < 3; ++a) {
        put_f64(os, f[p][a].real());
        put_f64(os, f[p][a].imag());
    }
}

void get_field(std::istream& is, VectorFieldC& f, std::size_t p) {
    for (int a = 0; a < 3; ++a) {
        const double re = get_f64(is);
        f[p][a] = {re, get_f64(is)};
    }
}

PhysicalConstants parse_constants(const std::string& text) {
    PhysicalConstants c;
    std::istringstream is(text);
    std::string tok;
    int seen = 0;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw FormatError("snapshot constants: bad entry '" + tok + "'");
        const std::string name = tok.substr(0, eq);
        double v = 0.0;
        try {
            v = std::stod(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw FormatError("snapshot constants: bad number in '" + tok + "'");
        }
        if (name == "hbar") c.hbar = v;
        else if (name == "eps0") c.eps0 = v;
        else if (name == "c") c.c = v;
        else throw FormatError("snapshot constants: unknown name '" + name + "'");
        ++seen;
    }
    if (seen != 3) throw FormatError("snapshot constants must list hbar, eps0 and c");
    c.validate();
    return c;
}

} // namespace

void write_snapshot(std::ostream& os, const Snapshot& snap) {
    const char* kind = std::holds_alternative<VectorFieldR>(snap.field)   ? "real3"
                       : std::holds_alternative<VectorFieldC>(snap.field) ? "complex3"
                                                                          : "bispinor";
    std::ostringstream hdr;
    hdr.precision(17);
    hdr << "format_version: 1\n"
        << "L: " << snap.grid.box_length() << '\n'
        << "N: " << snap.grid.points_per_axis() << '\n'
        << "field_kind: " << kind << '\n'
        << "constants: hbar=" << snap.constants.hbar << " eps0=" << snap.constants.eps0 << " c=" << snap.constants.c
        << '\n';
    if (!snap.label.empty()) hdr << "label: " << snap.label << '\n';
    hdr << '\n';
    os << hdr.str();

    const std::size_t n = snap.grid.size();
    if (const auto* r = std::get_if<VectorFieldR>(&snap.field)) {
        require_same_grid(snap.grid, r->grid(), "write_snapshot");
        for (std::size_t p = 0; p < n; ++p)
            for (int a = 0; a < 3; ++a) put_f64(os, (*r)[p][a]);
    } else if (const auto* c = std::get_if<VectorFieldC>(&snap.field)) {
        require_same_grid(snap.grid, c->grid(), "write_snapshot");
        for (std::size_t p = 0; p < n; ++p) put_field(os, *c, p);
    } else {
        const auto& b = std::get<Bispinor>(snap.field);
        require_same_grid(snap.grid, b.upper.grid(), "write_snapshot");
        require_same_grid(snap.grid, b.lower.grid(), "write_snapshot");
        for (std::size_t p = 0; p < n; ++p) {
            put_field(os, b.upper, p);
            put_field(os, b.lower, p);
        }
    }
    if (!os) throw FormatError("snapshot write failed");
}

Snapshot read_snapshot(std::istream& is) {
    std::map<std::string, std::string> header;
    std::string line;
    bool terminated = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            terminated = true;
            break;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw FormatError("snapshot header line without ':': '" + line + "'");
        std::string value = line.substr(colon + 1);
        value.erase(0, value.find_first_not_of(' '));
        header[line.substr(0, colon)] = value;
    }
    if (!terminated) throw FormatError("snapshot header not terminated by a blank line");
    for (const char* key : {"format_version", "L", "N", "field_kind", "constants"}) {
        if (!header.count(key)) throw FormatError(std::string("snapshot header lacks '") + key + "'");
    }
    if (header["format_version"] != "1") throw FormatError("unsupported snapshot format_version " + header["format_version"]);

    double L = 0.0;
    int N = 0;
    try {
        L = std::stod(header["L"]);
        N = std::stoi(header["N"]);
    } catch (const std::exception&) {
        throw FormatError("snapshot header: bad L or N");
    }
    const GridSpec grid(L, N);
    Snapshot snap{grid, parse_constants(header["constants"]), header.count("label") ? header["label"] : "",
                  VectorFieldR(grid)};

    const std::string& kind = header["field_kind"];
    const std::size_t n = grid.size();
    if (kind == "real3") {
        VectorFieldR f(grid);
        for (std::size_t p = 0; p < n; ++p)
            for (int a = 0; a < 3; ++a) f[p][a] = get_f64(is);
        snap.field = std::move(f);
    } else if (kind == "complex3") {
        VectorFieldC f(grid);
        for (std::size_t p = 0; p < n; ++p) get_field(is, f, p);
        snap.field = std::move(f);
    } else if (kind == "bispinor") {
        Bispinor b{VectorFieldC(grid), VectorFieldC(grid)};
        for (std::size_t p = 0; p < n; ++p) {
            get_field(is, b.upper, p);
            get_field(is, b.lower, p);
        }
        snap.field = std::move(b);
    } else {
        throw FormatError("unknown field_kind '" + kind + "'");
    }
    if (is.peek() != std::char_traits<char>::eof()) throw FormatError("snapshot payload longer than the header implies");
    return snap;
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& snap) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw FormatError("cannot open '" + path.string() + "' for writing");
    write_snapshot(os, snap);
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open '" + path.string() + "'");
    return read_snapshot(is);
}

} // namespace maxfock
