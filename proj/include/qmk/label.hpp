#ifndef QMK_LABEL_HPP
#define QMK_LABEL_HPP

#include <memory>
#include <string>
#include <vector>

namespace qmk {

/// Structured vertex/arrow label.  Vertices use kinds name, residue, tuple
/// and level; arrows additionally use returning (a Nakayama returning arrow
/// at a vertex) and connecting (the translation arrow out of a cone vertex).
/// Level and connecting labels nest, so iterated constructions stay
/// machine-decomposable.
class Label {
  public:
    enum class Kind { name, residue, tuple, level, returning, connecting };

    static Label of_name(std::string n);
    static Label of_residue(long v);
    static Label of_tuple(std::vector<long> t);
    static Label leveled(const Label& base, long t);
    static Label returning_at(const Label& vertex);
    static Label connecting_at(const Label& vertex, long d);

    Kind kind() const { return kind_; }
    const std::string& name() const;
    long residue() const;
    const std::vector<long>& tuple() const;
    const Label& base() const;
    long level() const;

    std::string str() const;
    bool operator==(const Label& o) const;
    bool operator!=(const Label& o) const { return !(*this == o); }

  private:
    Label() = default;
    Kind kind_ = Kind::name;
    std::string name_;
    std::vector<long> tuple_;
    std::shared_ptr<const Label> base_;
    long level_ = 0;
};

}  // namespace qmk

#endif
