#include "blg/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "blg/canonical.hpp"

namespace blg {

namespace {

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

// FNV-1a 64 over the three record fields.
std::string checksum(const std::string& a, const std::string& b, const std::string& c) {
    unsigned long long h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        h ^= '\x1f';
        h *= 1099511628211ull;
    };
    mix(a);
    mix(b);
    mix(c);
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

bool is_dec(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

HomCache::HomCache(std::string dir) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    path_ = dir + "/homcounts.log";
    load();
}

HomCache HomCache::from_env() {
    const char* dir = std::getenv("BLG_CACHE_DIR");
    return HomCache(dir ? std::string(dir) : std::string());
}

void HomCache::load() {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;
    std::string line;
    uintmax_t good = 0;
    bool corrupt = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kc, gc, cnt, sum, extra;
        if (!(ls >> kc >> gc >> cnt >> sum) || (ls >> extra) || sum != checksum(kc, gc, cnt) ||
            !is_dec(cnt)) {
            corrupt = true;
            break;
        }
        table_[{kc, gc}] = BigInt(cnt);
        good += line.size() + 1;
    }
    in.close();
    if (corrupt) std::filesystem::resize_file(path_, good);
}

std::optional<BigInt> HomCache::lookup(const Graph& k, const Graph& g) {
    if (!enabled()) return std::nullopt;
    auto key = std::make_pair(to_hex(canonical_form(k).certificate),
                              to_hex(canonical_form(g).certificate));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void HomCache::store(const Graph& k, const Graph& g, const BigInt& count) {
    if (!enabled()) return;
    auto key = std::make_pair(to_hex(canonical_form(k).certificate),
                              to_hex(canonical_form(g).certificate));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = table_.emplace(key, count);
    if (!inserted) return;
    std::string cnt = count.str();
    std::ofstream out(path_, std::ios::app);
    out << key.first << ' ' << key.second << ' ' << cnt << ' '
        << checksum(key.first, key.second, cnt) << '\n';
}

BigInt HomCache::count(const Graph& k, const Graph& g) {
    if (auto hit = lookup(k, g)) return *hit;
    BigInt c = hom_count_dp(k, g);
    store(k, g, c);
    return c;
}

}  // namespace blg
