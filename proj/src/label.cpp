#include "qmk/label.hpp"

#include <sstream>

#include "qmk/rational.hpp"

namespace qmk {

Label Label::of_name(std::string n) {
    Label l;
    l.kind_ = Kind::name;
    l.name_ = std::move(n);
    return l;
}

Label Label::of_residue(long v) {
    Label l;
    l.kind_ = Kind::residue;
    l.tuple_ = {v};
    return l;
}

Label Label::of_tuple(std::vector<long> t) {
    Label l;
    l.kind_ = Kind::tuple;
    l.tuple_ = std::move(t);
    return l;
}

Label Label::leveled(const Label& base, long t) {
    Label l;
    l.kind_ = Kind::level;
    l.base_ = std::make_shared<const Label>(base);
    l.level_ = t;
    return l;
}

Label Label::returning_at(const Label& vertex) {
    Label l;
    l.kind_ = Kind::returning;
    l.base_ = std::make_shared<const Label>(vertex);
    return l;
}

Label Label::connecting_at(const Label& vertex, long d) {
    Label l;
    l.kind_ = Kind::connecting;
    l.base_ = std::make_shared<const Label>(vertex);
    l.level_ = d;
    return l;
}

const std::string& Label::name() const {
    if (kind_ != Kind::name) throw Error("label is not a name label");
    return name_;
}

long Label::residue() const {
    if (kind_ != Kind::residue) throw Error("label is not a residue label");
    return tuple_[0];
}

const std::vector<long>& Label::tuple() const {
    if (kind_ != Kind::residue && kind_ != Kind::tuple) throw Error("label is not a residue/tuple label");
    return tuple_;
}

const Label& Label::base() const {
    if (!base_) throw Error("label has no base component");
    return *base_;
}

long Label::level() const {
    if (kind_ != Kind::level && kind_ != Kind::connecting) throw Error("label has no level component");
    return level_;
}

std::string Label::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::name:
            os << name_;
            break;
        case Kind::residue:
            os << tuple_[0];
            break;
        case Kind::tuple:
            os << "(";
            for (size_t i = 0; i < tuple_.size(); ++i) {
                if (i) os << ",";
                os << tuple_[i];
            }
            os << ")";
            break;
        case Kind::level:
            os << "(" << base_->str() << "," << level_ << ")";
            break;
        case Kind::returning:
            os << "b@" << base_->str();
            break;
        case Kind::connecting:
            os << "(" << base_->str() << "," << level_ << ")_1";
            break;
    }
    return os.str();
}

bool Label::operator==(const Label& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::name:
            return name_ == o.name_;
        case Kind::residue:
        case Kind::tuple:
            return tuple_ == o.tuple_;
        case Kind::level:
        case Kind::connecting:
            return level_ == o.level_ && *base_ == *o.base_;
        case Kind::returning:
            return *base_ == *o.base_;
    }
    return false;
}

}  // namespace qmk
