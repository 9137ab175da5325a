#pragma once

#include "s2cobar/core/errors.hpp"
#include "s2cobar/core/graded.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace s2cobar {

/// A finite graded structure given by tables of structure constants on a
/// named basis.  Missing entries are zero; the unit acts as identity and is
/// excluded from reduced coproducts.  Products whose degree leaves the
/// declared basis range are treated as truncated, so axiom checks should be
/// run on [min_degree(), max_degree()].
class PresentedAlgebra {
public:
    using key_type = int;

    enum class Kind { Algebra, Coalgebra, Bialgebra, S2Algebra };

    PresentedAlgebra(Ring ring, Kind kind) : ring_(ring), kind_(kind) {}

    int add_basis(const std::string& name, int degree)
    {
        if (index_.count(name))
            throw SchemaError("basis element '" + name + "' declared twice");
        index_[name] = static_cast<int>(names_.size());
        names_.push_back(name);
        degrees_.push_back(degree);
        return static_cast<int>(names_.size()) - 1;
    }
    void set_unit(int k) { unit_ = k; }
    void set_differential(int k, LinComb<int> v) { diff_[k] = std::move(v); }
    void set_product(int a, int b, LinComb<int> v) { prod_[{a, b}] = std::move(v); }
    void set_coproduct(int c, PairComb<int> v) { coprod_[c] = std::move(v); }
    void set_brace(int x, std::vector<int> ys, LinComb<int> v) { braces_[{x, std::move(ys)}] = std::move(v); }

    const Ring& ring() const { return ring_; }
    Kind kind() const { return kind_; }
    bool has_unit() const { return unit_ >= 0; }
    int size() const { return static_cast<int>(names_.size()); }
    std::optional<int> find(const std::string& name) const
    {
        auto it = index_.find(name);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }
    int min_degree() const { return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end()); }
    int max_degree() const { return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end()); }

    int degree(int k) const { return degrees_.at(static_cast<std::size_t>(k)); }
    int unit_key() const { return unit_; }
    bool is_unit(int k) const { return k == unit_; }
    std::string label(int k) const { return names_.at(static_cast<std::size_t>(k)); }
    std::vector<int> basis(int d) const
    {
        std::vector<int> out;
        for (int k = 0; k < size(); ++k)
            if (degrees_[static_cast<std::size_t>(k)] == d)
                out.push_back(k);
        return out;
    }

    LinComb<int> differential(int k) const
    {
        auto it = diff_.find(k);
        return it == diff_.end() ? LinComb<int>(ring_) : it->second;
    }
    LinComb<int> product(int a, int b) const
    {
        if (a == unit_)
            return LinComb<int>(ring_, b);
        if (b == unit_)
            return LinComb<int>(ring_, a);
        auto it = prod_.find({a, b});
        return it == prod_.end() ? LinComb<int>(ring_) : it->second;
    }
    PairComb<int> reduced_coproduct(int c) const
    {
        auto it = coprod_.find(c);
        return it == coprod_.end() ? PairComb<int>(ring_) : it->second;
    }
    LinComb<int> brace(int x, const std::vector<int>& ys) const
    {
        auto it = braces_.find({x, ys});
        return it == braces_.end() ? LinComb<int>(ring_) : it->second;
    }
    bool has_braces() const { return !braces_.empty(); }

private:
    Ring ring_;
    Kind kind_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::map<std::string, int> index_;
    int unit_ = -1;
    std::map<int, LinComb<int>> diff_;
    std::map<std::pair<int, int>, LinComb<int>> prod_;
    std::map<int, PairComb<int>> coprod_;
    std::map<std::pair<int, std::vector<int>>, LinComb<int>> braces_;
};

}  // namespace s2cobar
