#include "fuzzfrac/rhs_expr.hpp"

#include <optional>
#include <utility>
#include <variant>

namespace fuzzfrac {

struct RhsExpr::Node {
    struct Constant {
        FuzzyPowerFunc fn;
    };
    struct URef {};
    struct TURef {};
    struct Scale {
        CrispCoefFn coef;
        std::shared_ptr<const Node> child;
    };
    struct Sum {
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    std::variant<Constant, URef, TURef, Scale, Sum> value;
};

RhsExpr RhsExpr::constant(FuzzyPowerFunc fn) {
    return RhsExpr(std::make_shared<const Node>(Node{Node::Constant{std::move(fn)}}));
}

RhsExpr RhsExpr::u() { return RhsExpr(std::make_shared<const Node>(Node{Node::URef{}})); }

RhsExpr RhsExpr::tu() { return RhsExpr(std::make_shared<const Node>(Node{Node::TURef{}})); }

RhsExpr RhsExpr::scale(CrispCoefFn coef, RhsExpr child) {
    return RhsExpr(
        std::make_shared<const Node>(Node{Node::Scale{std::move(coef), std::move(child.node_)}}));
}

RhsExpr RhsExpr::sum(RhsExpr lhs, RhsExpr rhs) {
    return RhsExpr(
        std::make_shared<const Node>(Node{Node::Sum{std::move(lhs.node_), std::move(rhs.node_)}}));
}

RhsExpr::Kind RhsExpr::kind() const {
    struct Visitor {
        Kind operator()(const Node::Constant&) const { return Kind::constant; }
        Kind operator()(const Node::URef&) const { return Kind::u_ref; }
        Kind operator()(const Node::TURef&) const { return Kind::tu_ref; }
        Kind operator()(const Node::Scale&) const { return Kind::scale; }
        Kind operator()(const Node::Sum&) const { return Kind::sum; }
    };
    return std::visit(Visitor{}, node_->value);
}

const FuzzyPowerFunc& RhsExpr::const_fn() const {
    return std::get<Node::Constant>(node_->value).fn;
}

const CrispCoefFn& RhsExpr::coef() const { return std::get<Node::Scale>(node_->value).coef; }

RhsExpr RhsExpr::child() const { return RhsExpr(std::get<Node::Scale>(node_->value).child); }

RhsExpr RhsExpr::lhs() const { return RhsExpr(std::get<Node::Sum>(node_->value).lhs); }

RhsExpr RhsExpr::rhs() const { return RhsExpr(std::get<Node::Sum>(node_->value).rhs); }

std::vector<CrispCoefFn> RhsExpr::scale_coefs() const {
    std::vector<CrispCoefFn> out;
    switch (kind()) {
        case Kind::scale:
            out.push_back(coef());
            for (CrispCoefFn& c : child().scale_coefs()) {
                out.push_back(std::move(c));
            }
            break;
        case Kind::sum: {
            for (CrispCoefFn& c : lhs().scale_coefs()) {
                out.push_back(std::move(c));
            }
            for (CrispCoefFn& c : rhs().scale_coefs()) {
                out.push_back(std::move(c));
            }
            break;
        }
        default:
            break;
    }
    return out;
}

bool RhsExpr::uses_tu() const {
    switch (kind()) {
        case Kind::tu_ref:
            return true;
        case Kind::scale:
            return child().uses_tu();
        case Kind::sum:
            return lhs().uses_tu() || rhs().uses_tu();
        default:
            return false;
    }
}

}  // namespace fuzzfrac
