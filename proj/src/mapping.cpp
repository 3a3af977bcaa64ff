#include "umq/mapping.hpp"

#include "umq/errors.hpp"

namespace umq {

PointMap PointMap::between(const Space& source, const Space& target,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (source.size() != target.size()) {
        throw Error("SizesDiffer", "no bijection between " + std::to_string(source.size()) +
                                       " and " + std::to_string(target.size()) + " points");
    }
    const int n = source.size();
    if (static_cast<int>(pairs.size()) != n) {
        throw Error("NotBijective", "expected " + std::to_string(n) + " pairs, got " +
                                        std::to_string(pairs.size()));
    }
    PointMap m;
    m.forward_.assign(n, -1);
    m.inverse_.assign(n, -1);
    for (const auto& [from, to] : pairs) {
        const int i = source.index_of(from);
        const int j = target.index_of(to);
        if (m.forward_[i] != -1) {
            throw Error("NotBijective", "source point '" + from + "' mapped twice");
        }
        if (m.inverse_[j] != -1) {
            throw Error("NotBijective", "target point '" + to + "' hit twice");
        }
        m.forward_[i] = j;
        m.inverse_[j] = i;
    }
    return m;
}

PointMap PointMap::identity(const Space& source, const Space& target) {
    if (source.size() != target.size()) {
        throw Error("SizesDiffer", "identity pairing needs equal point counts");
    }
    PointMap m;
    m.forward_.resize(source.size());
    m.inverse_.resize(source.size());
    for (int i = 0; i < source.size(); ++i) {
        m.forward_[i] = i;
        m.inverse_[i] = i;
    }
    return m;
}

PointMap PointMap::inverted() const {
    PointMap m;
    m.forward_ = inverse_;
    m.inverse_ = forward_;
    return m;
}

std::vector<std::pair<std::string, std::string>> PointMap::name_pairs(const Space& source,
                                                                      const Space& target) const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i) {
        out.emplace_back(source.point_name(static_cast<int>(i)), target.point_name(forward_[i]));
    }
    return out;
}

PointMap compose(const PointMap& f, const PointMap& g) {
    if (f.size() != g.size()) {
        throw Error("SizesDiffer", "composition needs matching sizes");
    }
    PointMap result;
    result.forward_.resize(f.size());
    result.inverse_.resize(f.size());
    for (int i = 0; i < f.size(); ++i) {
        result.forward_[i] = g.forward(f.forward(i));
    }
    for (int i = 0; i < f.size(); ++i) {
        result.inverse_[result.forward_[i]] = i;
    }
    return result;
}

}  // namespace umq
