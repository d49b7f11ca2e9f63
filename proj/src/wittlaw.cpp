#include "wittcore/wittlaw.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <utility>

#include <unistd.h>

#include "exactalg/common.hpp"
#include "exactalg/integer.hpp"

namespace wittcore {

using exactalg::errkind;
using exactalg::fail;
using exactalg::require;
using exactalg::zz_pow;

MPoly<ZZ> ghost_poly(int p, int i, int arity, int offset) {
    const auto ord = exactalg::MonOrder::grevlex;
    MPoly<ZZ> w(arity, ord, ZZ(0));
    for (int j = 0; j <= i; ++j) {
        long e = 1;
        for (int k = 0; k < i - j; ++k) e *= p;
        exactalg::Mono m(static_cast<size_t>(arity), 0);
        m[static_cast<size_t>(offset + j)] = static_cast<int>(e);
        w = w + MPoly<ZZ>::monomial(arity, ord, m, zz_pow(ZZ(p), j));
    }
    return w;
}

namespace {

// poly^(p^k) by repeated p-th power.
MPoly<ZZ> pow_pk(const MPoly<ZZ>& f, int p, int k) {
    MPoly<ZZ> r = f;
    for (int t = 0; t < k; ++t) r = r.pow(p);
    return r;
}

// Solve the ghost recursion: given target ghost values g_0..g_{n-1} (each a
// polynomial), produce polys c_0..c_{n-1} with w_i(c) = g_i, i.e.
//   c_i = (g_i - sum_{j<i} p^j c_j^{p^(i-j)}) / p^i, exactly.
std::vector<MPoly<ZZ>> solve_ghost(const std::vector<MPoly<ZZ>>& targets, int p) {
    std::vector<MPoly<ZZ>> c;
    for (size_t i = 0; i < targets.size(); ++i) {
        MPoly<ZZ> acc = targets[i];
        for (size_t j = 0; j < i; ++j)
            acc = acc - pow_pk(c[j], p, static_cast<int>(i - j)).scaled(zz_pow(ZZ(p), static_cast<long>(j)));
        c.push_back(exact_div(acc, zz_pow(ZZ(p), static_cast<long>(i))));
    }
    return c;
}

// Check w_i(c) == target_i for every i (redundant with solve_ghost's exact
// divisions but kept as an independent guard on the generated families).
void verify_ghost(const std::vector<MPoly<ZZ>>& c, const std::vector<MPoly<ZZ>>& targets, int p, int arity) {
    for (size_t i = 0; i < c.size(); ++i) {
        MPoly<ZZ> w(arity, exactalg::MonOrder::grevlex, ZZ(0));
        for (size_t j = 0; j <= i; ++j)
            w = w + pow_pk(c[j], p, static_cast<int>(i - j)).scaled(zz_pow(ZZ(p), static_cast<long>(j)));
        require(w == targets[i], errkind::axiom_violation, "witt law fails ghost identity");
    }
}

}  // namespace

WittLaw gen_witt_law_fresh(int p, int n) {
    require(exactalg::is_prime(p), errkind::not_prime, "witt law: p must be prime");
    require(n >= 1, errkind::weight_out_of_range, "witt law: n must be >= 1");
    WittLaw law;
    law.p = p;
    law.n = n;

    const int a2 = 2 * n;
    std::vector<MPoly<ZZ>> sum_t, prod_t, neg_t, fr_t;
    for (int i = 0; i < n; ++i) {
        MPoly<ZZ> wx = ghost_poly(p, i, a2, 0);
        MPoly<ZZ> wy = ghost_poly(p, i, a2, n);
        sum_t.push_back(wx + wy);
        prod_t.push_back(wx * wy);
        neg_t.push_back(-ghost_poly(p, i, n, 0));
    }
    // Frobenius: w_i(Fr(x)) = w_{i+1}(x), landing in W_{n-1}.
    for (int i = 0; i + 1 < n; ++i) fr_t.push_back(ghost_poly(p, i + 1, n, 0));

    law.S = solve_ghost(sum_t, p);
    law.P = solve_ghost(prod_t, p);
    law.N = solve_ghost(neg_t, p);
    law.Fr = solve_ghost(fr_t, p);
    verify_ghost(law.S, sum_t, p, a2);
    verify_ghost(law.P, prod_t, p, a2);
    verify_ghost(law.N, neg_t, p, n);
    verify_ghost(law.Fr, fr_t, p, n);
    return law;
}

// ---------------------------------------------------------------------------
// Disk cache.  Format (little-endian):
//   magic "WLAW", u32 version=1, u32 p, u32 n,
//   4 polynomial families, each: u32 count, then per poly:
//     u32 arity, u64 nterms, per term: i32[arity] exponents,
//     u64 byte-length + bytes of the decimal coefficient string,
//   u64 FNV-1a hash of everything after the magic.
// ---------------------------------------------------------------------------

namespace {

std::string g_cache_dir;
std::mutex g_mutex;

struct Fnv {
    uint64_t h = 1469598103934665603ULL;
    void feed(const void* data, size_t len) {
        const auto* b = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; ++i) {
            h ^= b[i];
            h *= 1099511628211ULL;
        }
    }
};

void put_u32(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

struct Reader {
    const std::string& s;
    size_t pos = 0;
    void need(size_t k) const {
        require(pos + k <= s.size(), errkind::internal, "witt law cache: truncated file");
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
        pos += 8;
        return v;
    }
    std::string bytes(size_t k) {
        need(k);
        std::string r = s.substr(pos, k);
        pos += k;
        return r;
    }
};

void write_family(std::string& out, const std::vector<MPoly<ZZ>>& fam) {
    put_u32(out, static_cast<uint32_t>(fam.size()));
    for (const auto& f : fam) {
        put_u32(out, static_cast<uint32_t>(f.arity()));
        put_u64(out, static_cast<uint64_t>(f.terms().size()));
        for (const auto& [m, c] : f.terms()) {
            for (int e : m) put_u32(out, static_cast<uint32_t>(e));
            std::string dec = c.get_str();
            put_u64(out, static_cast<uint64_t>(dec.size()));
            out += dec;
        }
    }
}

std::vector<MPoly<ZZ>> read_family(Reader& rd) {
    std::vector<MPoly<ZZ>> fam;
    uint32_t cnt = rd.u32();
    for (uint32_t i = 0; i < cnt; ++i) {
        uint32_t arity = rd.u32();
        require(arity <= 64, errkind::internal, "witt law cache: bad arity");
        uint64_t nt = rd.u64();
        std::map<exactalg::Mono, ZZ> terms;
        for (uint64_t t = 0; t < nt; ++t) {
            exactalg::Mono m(arity, 0);
            for (uint32_t v = 0; v < arity; ++v) m[v] = static_cast<int>(rd.u32());
            uint64_t len = rd.u64();
            require(len <= 1u << 20, errkind::internal, "witt law cache: bad coefficient");
            terms[m] = ZZ(rd.bytes(static_cast<size_t>(len)));
        }
        fam.push_back(MPoly<ZZ>::from_map(static_cast<int>(arity), exactalg::MonOrder::grevlex, ZZ(0), terms));
    }
    return fam;
}

}  // namespace

void set_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lk(g_mutex);
    g_cache_dir = dir;
}

std::string cache_dir() {
    std::lock_guard<std::mutex> lk(g_mutex);
    if (!g_cache_dir.empty()) return g_cache_dir;
    if (const char* env = std::getenv("WITTLAU_CACHE_DIR")) return env;
    return ".witt_cache";
}

std::string cache_file_path(int p, int n) {
    return cache_dir() + "/wittlaw_p" + std::to_string(p) + "_n" + std::to_string(n) + ".bin";
}

void save_law(const WittLaw& law, const std::string& path) {
    std::string body;
    put_u32(body, 1);  // version
    put_u32(body, static_cast<uint32_t>(law.p));
    put_u32(body, static_cast<uint32_t>(law.n));
    write_family(body, law.S);
    write_family(body, law.P);
    write_family(body, law.N);
    write_family(body, law.Fr);
    Fnv fnv;
    fnv.feed(body.data(), body.size());
    std::string out = "WLAW" + body;
    put_u64(out, fnv.h);

    namespace fs = std::filesystem;
    fs::path target(path);
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(static_cast<unsigned>(::getpid()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(f), errkind::internal, "witt law cache: cannot open temp file");
        f.write(out.data(), static_cast<std::streamsize>(out.size()));
        require(static_cast<bool>(f), errkind::internal, "witt law cache: write failed");
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        fail(errkind::internal, "witt law cache: atomic rename failed");
    }
}

WittLaw load_law(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    require(static_cast<bool>(f), errkind::internal, "witt law cache: cannot open file");
    std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    require(all.size() >= 12 + 8 && all.compare(0, 4, "WLAW") == 0, errkind::internal,
            "witt law cache: bad magic");
    std::string body = all.substr(4, all.size() - 12);
    Reader tail{all, all.size() - 8};
    uint64_t stored = tail.u64();
    Fnv fnv;
    fnv.feed(body.data(), body.size());
    require(fnv.h == stored, errkind::internal, "witt law cache: checksum mismatch");

    Reader rd{body, 0};
    uint32_t version = rd.u32();
    require(version == 1, errkind::internal, "witt law cache: unsupported version");
    WittLaw law;
    law.p = static_cast<int>(rd.u32());
    law.n = static_cast<int>(rd.u32());
    law.S = read_family(rd);
    law.P = read_family(rd);
    law.N = read_family(rd);
    law.Fr = read_family(rd);
    require(rd.pos == body.size(), errkind::internal, "witt law cache: trailing data");
    return law;
}

const WittLaw* witt_law(int p, int n) {
    static std::map<std::pair<int, int>, WittLaw> pool;
    static std::mutex pool_mutex;
    std::lock_guard<std::mutex> lk(pool_mutex);
    auto key = std::make_pair(p, n);
    auto it = pool.find(key);
    if (it != pool.end()) return &it->second;

    std::string path = cache_file_path(p, n);
    WittLaw law;
    bool loaded = false;
    if (std::filesystem::exists(path)) {
        try {
            law = load_law(path);
            loaded = (law.p == p && law.n == n && static_cast<int>(law.S.size()) == n);
        } catch (const exactalg::math_error&) {
            loaded = false;  // corrupt cache: regenerate
        }
    }
    if (!loaded) {
        law = gen_witt_law_fresh(p, n);
        save_law(law, path);
    }
    return &pool.emplace(key, std::move(law)).first->second;
}

}  // namespace wittcore
