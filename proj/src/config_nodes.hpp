#pragma once

// Internal node graph behind Configuration. Not installed; shared by
// config.cpp, config_json.cpp, builtin.cpp and decompose.cpp.

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "polyconf/config.hpp"

namespace polyconf {

struct VecHash {
    size_t operator()(const ExpVec& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : v) {
            std::uint64_t u = static_cast<std::uint64_t>(x);
            for (int i = 0; i < 8; ++i) {
                h ^= (u >> (8 * i)) & 0xff;
                h *= 1099511628211ull;
            }
        }
        return static_cast<size_t>(h);
    }
};

class ConfigNode : public std::enable_shared_from_this<ConfigNode> {
  public:
    ConfigNode(int dim, bool memoize) : dim_(dim), memoize_(memoize) {}
    virtual ~ConfigNode() = default;

    int dim() const { return dim_; }
    const std::optional<std::vector<Int>>& alphabet() const { return alphabet_; }
    void set_alphabet(std::vector<Int> a);

    Int coeff(const ExpVec& v) const;

    virtual nlohmann::json descriptor() const = 0;
    virtual std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>& self) const = 0;

  protected:
    virtual Int compute(const ExpVec& v) const = 0;
    int dim_;
    std::optional<std::vector<Int>> alphabet_;  // sorted when present

  private:
    bool memoize_;
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<ExpVec, Int, VecHash> memo_;
};

class FullPeriodicNode final : public ConfigNode {
  public:
    FullPeriodicNode(int dim, const std::vector<ExpVec>& basis, const std::map<ExpVec, Int>& table);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>& self) const override;
    const Lattice& lattice() const { return lattice_; }
    const std::map<ExpVec, Int>& table() const { return table_; }

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Lattice lattice_;
    std::map<ExpVec, Int> table_;  // keyed by canonical coset representative
};

class FiberPeriodicNode final : public ConfigNode {
  public:
    FiberPeriodicNode(int dim, const ExpVec& direction, std::int64_t multiplicity,
                      const std::vector<std::pair<ExpVec, std::vector<Int>>>& fibers);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>& self) const override;
    const Direction& direction() const { return dir_; }
    std::int64_t multiplicity() const { return mult_; }
    const std::map<ExpVec, std::vector<Int>>& fibers() const { return fibers_; }

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Direction dir_;
    std::int64_t mult_;
    Lattice line_;
    size_t pivot_;
    std::map<ExpVec, std::vector<Int>> fibers_;  // canonical rep -> one period of values
};

class BeattyNode final : public ConfigNode {
  public:
    BeattyNode(int dim, Int p, Int s, Int q, Int r, ExpVec weight);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>&) const override {
        return std::nullopt;
    }

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Int p_, s_, q_, r_;
    ExpVec weight_;
};

class SumNode final : public ConfigNode {
  public:
    SumNode(std::vector<Configuration> children);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>&) const override;

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    std::vector<Configuration> children_;
};

class ScaleNode final : public ConfigNode {
  public:
    ScaleNode(Int k, Configuration child);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>&) const override;

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Int k_;
    Configuration child_;
};

class TranslateNode final : public ConfigNode {
  public:
    TranslateNode(Configuration child, ExpVec by);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>&) const override;

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Configuration child_;
    ExpVec by_;
};

class MirrorNode final : public ConfigNode {
  public:
    MirrorNode(Configuration child, int axis);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>&) const override;

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Configuration child_;
    int axis_;
};

class PolyApplyNode final : public ConfigNode {
  public:
    PolyApplyNode(LaurentPoly f, Configuration child);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>&) const override;

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    LaurentPoly f_;
    Configuration child_;
};

class BinarizeNode final : public ConfigNode {
  public:
    BinarizeNode(Configuration child, std::vector<Int> ones);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>& self) const override;

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Configuration child_;
    std::vector<Int> ones_;  // sorted
};

class DeclareAlphabetNode final : public ConfigNode {
  public:
    DeclareAlphabetNode(Configuration child, std::vector<Int> values);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>&) const override;

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Configuration child_;
};

class CosetFilterNode final : public ConfigNode {
  public:
    CosetFilterNode(Configuration child, Lattice lattice, const std::vector<ExpVec>& reps);
    nlohmann::json descriptor() const override;
    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>& self) const override;

  protected:
    Int compute(const ExpVec& v) const override;

  private:
    Configuration child_;
    Lattice lattice_;
    std::vector<ExpVec> reps_;  // sorted canonical representatives
};

// JSON vector helpers shared by the descriptor code.
nlohmann::json vec_to_json(const ExpVec& v);
ExpVec vec_from_json(const nlohmann::json& j, int dim);
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

}  // namespace polyconf
