#include "ihrep/basis_cache.hpp"
#include "ihrep/linalg.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace ihrep {

std::unique_ptr<BasisCache> BasisCache::from_environment() {
    const char* dir = std::getenv(kCacheDirEnv);
    if (dir == nullptr || *dir == '\0')
        return std::make_unique<BasisCache>();
    return std::make_unique<BasisCache>(std::filesystem::path(dir));
}

BasisCache& BasisCache::shared() {
    static BasisCache cache;
    return cache;
}

std::filesystem::path BasisCache::file_for(unsigned k) const {
    return directory_.value_or(".") / ("relation-ideal-k" + std::to_string(k) + ".gb");
}

std::shared_ptr<const GroebnerBasis> BasisCache::get(unsigned k) {
    std::promise<std::shared_ptr<const GroebnerBasis>> promise;
    std::shared_future<std::shared_ptr<const GroebnerBasis>> pending;
    bool owner = false;
    {
        std::lock_guard lock(mutex_);
        auto [it, inserted] = entries_.try_emplace(k);
        if (inserted) {
            it->second = promise.get_future().share();
            owner = true;
        }
        pending = it->second;
    }
    if (!owner)
        return pending.get();
    try {
        std::optional<GroebnerBasis> basis = load(k);
        if (!basis) {
            basis = relation_ideal_basis(k);
            store(*basis, k);
        }
        auto value = std::make_shared<const GroebnerBasis>(std::move(*basis));
        promise.set_value(value);
        return value;
    } catch (...) {
        promise.set_exception(std::current_exception());
        throw;
    }
}

namespace {

// f (homogeneous) lies in the ideal of `gens` iff it is in the span of the
// degree-deg(f) multiples m * g. Exact, and independent of any Groebner basis.
bool in_span_of_multiples(const GradedPoly& f, const std::vector<GradedPoly>& gens) {
    if (f.is_zero())
        return true;
    if (!f.is_homogeneous())
        return false;
    const auto degree = static_cast<unsigned>(f.degree());
    std::map<Monomial3, std::size_t, LeadingFirst> column;
    RationalMatrix rows;
    auto add_row = [&](const GradedPoly& p) {
        std::vector<Rational> row(column.size());
        for (const auto& [mono, c] : p.terms()) {
            const auto [it, inserted] = column.emplace(mono, column.size());
            if (inserted)
                row.resize(column.size());
            row[it->second] = c;
        }
        rows.push_back(std::move(row));
    };
    for (const auto& g : gens) {
        if (g.degree() > f.degree())
            continue;
        const unsigned rest = degree - static_cast<unsigned>(g.degree());
        for (std::uint32_t k = 0; 6 * k <= rest; ++k)
            for (std::uint32_t j = 0; 6 * k + 4 * j <= rest; ++j)
                if ((rest - 6 * k - 4 * j) % 2 == 0)
                    add_row(g.times_term({(rest - 6 * k - 4 * j) / 2, j, k}, Rational(1)));
    }
    const std::size_t without = rank(rows);
    add_row(f);
    for (auto& row : rows)
        row.resize(column.size());
    return rank(rows) == without;
}

}  // namespace

std::optional<GroebnerBasis> BasisCache::load(unsigned k) const {
    if (!directory_)
        return std::nullopt;
    std::ifstream in(file_for(k));
    if (!in)
        return std::nullopt;
    std::ostringstream text;
    text << in.rdbuf();
    try {
        GroebnerBasis basis = GroebnerBasis::parse_canonical_text(text.str());
        if (basis.source_k() != k || !basis.s_polynomials_reduce_to_zero())
            return std::nullopt;
        const auto gens = ideal_generators(k);
        for (const auto& g : gens)
            if (!basis.contains(g))
                return std::nullopt;
        for (const auto& f : basis.generators())
            if (!in_span_of_multiples(f, gens))
                return std::nullopt;
        return basis;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void BasisCache::store(const GroebnerBasis& basis, unsigned k) const {
    if (!directory_)
        return;
    std::error_code ec;
    std::filesystem::create_directories(*directory_, ec);
    const auto target = file_for(k);
    auto temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::trunc);
        if (!out)
            return;
        out << basis.to_canonical_text();
        if (!out)
            return;
    }
    std::filesystem::rename(temp, target, ec);
}

}  // namespace ihrep
