#include "ca/io.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "ca/parse.hpp"

namespace ca {

namespace fs = std::filesystem;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string cache_key(const IdealPresentation& I, const std::string& operation,
                      const std::string& params) {
    std::ostringstream os;
    os << field_spec(I.field) << '\n' << order_spec(I.order) << '\n';
    for (auto& nm : I.names) os << nm << ' ';
    os << '\n';
    for (auto& g : I.gens) os << g.reorder(I.order).str(I.names) << '\n';
    os << operation << '\n' << params << '\n';
    return fnv1a_hex(os.str());
}

ResultCache::ResultCache(const std::string& dir) : dir_(dir) {
    if (!dir_.empty()) fs::create_directories(dir_);
}

std::optional<std::string> ResultCache::load(const std::string& key) {
    if (!enabled()) return std::nullopt;
    std::ifstream in(fs::path(dir_) / (key + ".txt"), std::ios::binary);
    if (!in) {
        ++misses;
        return std::nullopt;
    }
    std::string digest;
    std::getline(in, digest);
    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (digest != fnv1a_hex(payload)) {
        ++corrupt;
        std::cerr << "warning: cache entry " << key << " failed its checksum; recomputing\n";
        return std::nullopt;
    }
    ++hits;
    return payload;
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
    if (!enabled()) return;
    static std::mt19937_64 gen{std::random_device{}()};
    fs::path target = fs::path(dir_) / (key + ".txt");
    fs::path tmp = fs::path(dir_) / (key + ".tmp" + std::to_string(gen()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << fnv1a_hex(payload) << '\n' << payload;
    }
    fs::rename(tmp, target);
}

std::string serialize_basis(const GroebnerBasis& gb, const IdealPresentation& I) {
    std::ostringstream os;
    for (auto& g : gb.elements) os << g.str(I.names) << '\n';
    return os.str();
}

GroebnerBasis deserialize_basis(const std::string& payload, const IdealPresentation& I) {
    GroebnerBasis gb;
    gb.order = I.order;
    gb.reduced = true;
    std::istringstream in(payload);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        gb.elements.push_back(parse_polynomial(line, I.names, I.field, I.order));
    }
    return gb;
}

std::string serialize_resolution(const Resolution& R, const IdealPresentation& I) {
    std::ostringstream os;
    os << "minimal " << (R.minimal ? 1 : 0) << '\n';
    os << "modules " << R.modules.size() << '\n';
    for (auto& m : R.modules) {
        os << m.rank();
        for (int t : m.twists) os << ' ' << t;
        os << '\n';
    }
    os << "maps " << R.maps.size() << '\n';
    for (auto& map : R.maps)
        for (auto& col : map)
            for (int r = 0; r < col.rank(); ++r) os << col[r].str(I.names) << '\n';
    return os.str();
}

Resolution deserialize_resolution(const std::string& payload, const IdealPresentation& I) {
    std::istringstream in(payload);
    TermOrder base = TermOrder::grevlex();
    std::string word;
    int minimal = 0;
    std::size_t nmod = 0, nmaps = 0;
    if (!(in >> word >> minimal) || word != "minimal")
        throw Error("resolution payload: bad header");
    if (!(in >> word >> nmod) || word != "modules")
        throw Error("resolution payload: bad header");
    Resolution R;
    R.minimal = minimal != 0;
    for (std::size_t k = 0; k < nmod; ++k) {
        int rank = 0;
        if (!(in >> rank) || rank < 0) throw Error("resolution payload: bad module");
        GradedFreeModule m;
        m.twists.resize(rank);
        for (int& t : m.twists)
            if (!(in >> t)) throw Error("resolution payload: bad module");
        R.modules.push_back(std::move(m));
    }
    if (!(in >> word >> nmaps) || word != "maps" || nmaps + 1 != nmod)
        throw Error("resolution payload: bad header");
    std::getline(in, word);
    for (std::size_t k = 0; k < nmaps; ++k) {
        int rows = R.modules[k].rank(), cols = R.modules[k + 1].rank();
        std::vector<VecPoly> map;
        for (int c = 0; c < cols; ++c) {
            std::vector<Polynomial> coords;
            for (int r = 0; r < rows; ++r) {
                std::string line;
                if (!std::getline(in, line)) throw Error("resolution payload: truncated");
                coords.push_back(parse_polynomial(line, I.names, I.field, base));
            }
            map.push_back(VecPoly(std::move(coords)));
        }
        R.maps.push_back(std::move(map));
    }
    return R;
}

GroebnerBasis cached_groebner(ResultCache& cache, const IdealPresentation& I) {
    std::string key = cache_key(I, "groebner");
    if (auto hit = cache.load(key)) {
        try {
            return deserialize_basis(*hit, I);
        } catch (const Error&) {
            ++cache.corrupt;
            std::cerr << "warning: cache entry " << key << " would not parse; recomputing\n";
        }
    }
    GroebnerBasis gb = buchberger(I, I.order);
    cache.store(key, serialize_basis(gb, I));
    return gb;
}

Resolution cached_resolution(ResultCache& cache, const IdealPresentation& I) {
    std::string key = cache_key(I, "resolution");
    if (auto hit = cache.load(key)) {
        try {
            return deserialize_resolution(*hit, I);
        } catch (const Error&) {
            ++cache.corrupt;
            std::cerr << "warning: cache entry " << key << " would not parse; recomputing\n";
        }
    }
    Resolution R = minimal_free_resolution(I);
    cache.store(key, serialize_resolution(R, I));
    return R;
}

}  // namespace ca
