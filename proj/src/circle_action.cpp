#include "gravity/circle_action.hpp"

#include <map>
#include <mutex>

#include "gravity/errors.hpp"

namespace gravity {

ArnoldElement delta_contract(const ArnoldElement& x) {
    ArnoldElement out(x.ambient(), x.degree() - 1);
    if (x.degree() == 0)
        return ArnoldElement(x.ambient(), -1);  // zero in degree -1
    for (const auto& [m, c] : x.terms()) {
        Rational sign(1);
        for (std::size_t l = 0; l < m.factors.size(); ++l) {
            ArnoldMonomial deleted;
            deleted.factors.reserve(m.factors.size() - 1);
            for (std::size_t j = 0; j < m.factors.size(); ++j)
                if (j != l)
                    deleted.factors.push_back(m.factors[j]);
            out.add_term(deleted, c * sign);
            sign = -sign;
        }
    }
    return out;
}

namespace {

struct Key {
    int n;
    int k;
    auto operator<=>(const Key&) const = default;
};

std::mutex delta_mutex;
std::map<Key, LinearMap> delta_cache;

struct ModuliData {
    EchelonForm echelon;
    std::vector<ModuliClass> classes;
};

std::mutex moduli_mutex;
std::map<Key, ModuliData> moduli_cache;

ModuliData build_moduli(int n, int k) {
    const int dim_k = static_cast<int>(basis(n, k).size());

    // ker(Delta*) equals im(Delta*) in each degree (H_*(D(n)) is free over
    // the exterior algebra on Delta), so the canonical echelon basis of the
    // kernel can be computed from the much sparser spanning set
    // {Delta*(m) : m a degree-(k+1) monomial}. Both facts are certified
    // below: every row is checked to be Delta*-closed and the dimension is
    // checked against an independent rank computation.
    std::vector<SparseVec> spanning;
    const auto& above = basis(n, k + 1);
    spanning.reserve(above.size());
    for (const ArnoldMonomial& m : above) {
        ArnoldElement e(n, k + 1);
        e.add_term(m, Rational(1));
        spanning.push_back(to_sparse(to_coordinates(delta_contract(e))));
    }
    ModuliData data;
    data.echelon = rref(std::move(spanning), dim_k);

    const LinearMap& d = delta_matrix(n, k);
    const int kernel_dim = dim_k - rank(d);
    if (data.echelon.rank() != kernel_dim)
        throw Error("moduli basis: image dimension differs from kernel dimension");
    for (const SparseVec& row : data.echelon.rows) {
        ArnoldElement e = from_coordinates(n, k, to_dense(row, dim_k));
        if (!delta_contract(e).is_zero())
            throw Error("moduli basis: spanning vector is not Delta*-closed");
        data.classes.push_back(ModuliClass{std::move(e), weight(k)});
    }
    return data;
}

}  // namespace

const LinearMap& delta_matrix(int n, int k) {
    std::lock_guard<std::mutex> lock(delta_mutex);
    auto it = delta_cache.find(Key{n, k});
    if (it != delta_cache.end())
        return it->second;

    LinearMap m;
    m.cols = static_cast<int>(basis(n, k).size());
    m.rows = k >= 1 ? static_cast<int>(basis(n, k - 1).size()) : 0;
    m.source_basis_tag = "arnold:n=" + std::to_string(n) + ":k=" + std::to_string(k);
    m.target_basis_tag = "arnold:n=" + std::to_string(n) + ":k=" + std::to_string(k - 1);
    if (k >= 1) {
        const auto& source = basis(n, k);
        for (int col = 0; col < static_cast<int>(source.size()); ++col) {
            ArnoldElement e(n, k);
            e.add_term(source[col], Rational(1));
            ArnoldElement image = delta_contract(e);
            for (const auto& [mono, c] : image.terms())
                m.add(basis_index(n, k - 1, mono), col, c);
        }
    }
    m.normalize();
    return delta_cache.emplace(Key{n, k}, std::move(m)).first->second;
}

const std::vector<ModuliClass>& moduli_basis(int n, int k) {
    if (n < 2)
        throw OutOfRange("moduli basis requires n >= 2");
    std::lock_guard<std::mutex> lock(moduli_mutex);
    auto it = moduli_cache.find(Key{n, k});
    if (it == moduli_cache.end())
        it = moduli_cache.emplace(Key{n, k}, build_moduli(n, k)).first;
    return it->second.classes;
}

const EchelonForm& moduli_matrix(int n, int k) {
    if (n < 2)
        throw OutOfRange("moduli basis requires n >= 2");
    std::lock_guard<std::mutex> lock(moduli_mutex);
    auto it = moduli_cache.find(Key{n, k});
    if (it == moduli_cache.end())
        it = moduli_cache.emplace(Key{n, k}, build_moduli(n, k)).first;
    return it->second.echelon;
}

Vec moduli_coordinates(const ArnoldElement& x) {
    if (!delta_contract(x).is_zero())
        throw NotDeltaClosed("element is not Delta*-closed");
    const EchelonForm& e = moduli_matrix(x.ambient(), x.degree());
    Vec v = to_coordinates(x);
    Vec coords = e.reduce(v);
    for (const Rational& c : v)
        if (!is_zero(c))
            throw NotInSpan("Delta*-closed element outside the kernel span");
    return coords;
}

}  // namespace gravity
