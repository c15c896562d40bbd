#include "higauge/homotopy.hpp"

#include <sstream>

namespace higauge {

HomotopyFamily interpolate(const TwoConnection& c0, const TwoConnection& c1) {
  c0.check();
  c1.check();
  if (c0.patch_dim() != c1.patch_dim() || c0.module() != c1.module())
    throw Error(ErrorKind::Type, "interpolation endpoints live on different patches");
  HomotopyFamily fam;
  fam.c0 = c0;
  fam.c1 = c1;
  fam.Theta = c1.A - c0.A;
  fam.Phi = c1.B - c0.B;
  Poly t = Poly::param_t();
  fam.A_t = c0.A + fam.Theta.scaled(t);
  fam.B_t = c0.B + fam.Phi.scaled(t);
  return fam;
}

FamilyCurvatures family_curvatures(const HomotopyFamily& fam) {
  auto [F0, G0] = curvatures(fam.c0);
  Poly t = Poly::param_t();
  Poly t2 = t * t;
  FamilyCurvatures out;
  out.F_t = F0 + (d(fam.Theta) + bracket(fam.c0.A, fam.Theta) - alpha_push(fam.Phi)).scaled(t) +
            wedge_square(fam.Theta).scaled(t2);
  out.G_t = G0 +
            (d(fam.Phi) + act(fam.Theta, fam.c0.B) + act(fam.c0.A, fam.Phi)).scaled(t) +
            act(fam.Theta, fam.Phi).scaled(t2);
  out.dF_dt = d(fam.Theta) + bracket(fam.A_t, fam.Theta) - alpha_push(fam.Phi);
  out.dG_dt = d(fam.Phi) + act(fam.A_t, fam.Phi) + act(fam.Theta, fam.B_t);
  return out;
}

std::pair<PolyForm, PolyForm> family_curvature_residuals(const HomotopyFamily& fam) {
  auto closed = family_curvatures(fam);
  auto direct = curvatures({fam.A_t, fam.B_t});
  PolyForm rF = (closed.F_t - direct.F) + (closed.dF_dt - partial_param(direct.F, Poly::kT));
  PolyForm rG = (closed.G_t - direct.G) + (closed.dG_dt - partial_param(direct.G, Poly::kT));
  return {std::move(rF), std::move(rG)};
}

namespace {

CSExprPtr make(CSExpr::Op op, int degree, VKind vkind) {
  struct Mk : CSExpr {
    Mk(Op o, int d, VKind v) : CSExpr(o, d, v) {}
  };
  return std::make_shared<Mk>(op, degree, vkind);
}

CSExpr* mut(const CSExprPtr& p) { return const_cast<CSExpr*>(p.get()); }

}  // namespace

CSExprPtr CSExpr::genA() { return make(Op::GenA, 1, VKind::AlgG); }
CSExprPtr CSExpr::genB() { return make(Op::GenB, 2, VKind::AlgH); }
CSExprPtr CSExpr::genF() { return make(Op::GenF, 2, VKind::AlgG); }
CSExprPtr CSExpr::genG() { return make(Op::GenG, 3, VKind::AlgH); }

CSExprPtr CSExpr::sum(std::vector<CSExprPtr> kids) {
  if (kids.empty()) throw Error(ErrorKind::Structural, "empty sum");
  for (const auto& k : kids)
    if (k->degree() != kids[0]->degree() || k->vkind() != kids[0]->vkind())
      throw Error(ErrorKind::Type, "sum of expressions of different grading");
  auto e = make(Op::Sum, kids[0]->degree(), kids[0]->vkind());
  mut(e)->kids_ = std::move(kids);
  return e;
}

CSExprPtr CSExpr::scale(Poly w, CSExprPtr e0) {
  auto e = make(Op::Scale, e0->degree(), e0->vkind());
  mut(e)->weight_ = std::move(w);
  mut(e)->kids_ = {std::move(e0)};
  return e;
}

CSExprPtr CSExpr::bracket(CSExprPtr a, CSExprPtr b) {
  if (a->vkind() != b->vkind()) throw Error(ErrorKind::Type, "bracket grading mismatch");
  auto e = make(Op::Bracket, a->degree() + b->degree(), a->vkind());
  mut(e)->kids_ = {std::move(a), std::move(b)};
  return e;
}

CSExprPtr CSExpr::act(CSExprPtr a, CSExprPtr b) {
  if (a->vkind() != VKind::AlgG || b->vkind() != VKind::AlgH)
    throw Error(ErrorKind::Type, "act expects (g, h) expressions");
  auto e = make(Op::Act, a->degree() + b->degree(), VKind::AlgH);
  mut(e)->kids_ = {std::move(a), std::move(b)};
  return e;
}

CSExprPtr CSExpr::alpha(CSExprPtr e0) {
  if (e0->vkind() != VKind::AlgH) throw Error(ErrorKind::Type, "alpha expects an h expression");
  auto e = make(Op::Alpha, e0->degree(), VKind::AlgG);
  mut(e)->kids_ = {std::move(e0)};
  return e;
}

CSExprPtr CSExpr::pair(std::vector<CSExprPtr> slots, CSExprPtr h) {
  int deg = h->degree();
  for (const auto& s : slots) {
    if (s->vkind() != VKind::AlgG) throw Error(ErrorKind::Type, "pairing slot must be g-valued");
    deg += s->degree();
  }
  if (h->vkind() != VKind::AlgH) throw Error(ErrorKind::Type, "pairing h-argument must be h-valued");
  auto e = make(Op::Pair, deg, VKind::Scalar);
  mut(e)->kids_ = std::move(slots);
  mut(e)->kids_.push_back(std::move(h));
  return e;
}

std::string CSExpr::str() const {
  std::ostringstream os;
  switch (op_) {
    case Op::GenA: return "A";
    case Op::GenB: return "B";
    case Op::GenF: return "F";
    case Op::GenG: return "G";
    case Op::Sum: {
      os << "(";
      for (size_t i = 0; i < kids_.size(); ++i) os << (i ? " + " : "") << kids_[i]->str();
      os << ")";
      return os.str();
    }
    case Op::Scale:
      os << "(" << weight_.str() << ")*" << kids_[0]->str();
      return os.str();
    case Op::Bracket:
      os << "[" << kids_[0]->str() << "," << kids_[1]->str() << "]";
      return os.str();
    case Op::Act:
      os << "(" << kids_[0]->str() << " |> " << kids_[1]->str() << ")";
      return os.str();
    case Op::Alpha:
      os << "alpha(" << kids_[0]->str() << ")";
      return os.str();
    case Op::Pair: {
      os << "<";
      for (size_t i = 0; i + 1 < kids_.size(); ++i) os << (i ? " " : "") << kids_[i]->str();
      os << ", " << kids_.back()->str() << ">";
      return os.str();
    }
  }
  return "?";
}

GeneratorEnv GeneratorEnv::from_family(const HomotopyFamily& fam, const Pairing& p) {
  GeneratorEnv env;
  env.A = fam.A_t;
  env.B = fam.B_t;
  auto cur = curvatures({fam.A_t, fam.B_t});
  env.F = cur.F;
  env.G = cur.G;
  env.Theta = partial_param(fam.A_t, Poly::kT);
  env.Phi = partial_param(fam.B_t, Poly::kT);
  env.xm = fam.A_t.module();
  env.pairing = &p;
  return env;
}

GeneratorEnv GeneratorEnv::cs_family(const TwoConnection& c, const Pairing& p) {
  return from_family(interpolate(TwoConnection::zero(c.patch_dim(), c.module()), c), p);
}

PolyForm eval(const CSExprPtr& e, const GeneratorEnv& env) {
  switch (e->op()) {
    case CSExpr::Op::GenA: return env.A;
    case CSExpr::Op::GenB: return env.B;
    case CSExpr::Op::GenF: return env.F;
    case CSExpr::Op::GenG: return env.G;
    case CSExpr::Op::Sum: {
      PolyForm acc = eval(e->kids()[0], env);
      for (size_t i = 1; i < e->kids().size(); ++i) acc = acc + eval(e->kids()[i], env);
      return acc;
    }
    case CSExpr::Op::Scale: return eval(e->kids()[0], env).scaled(e->weight());
    case CSExpr::Op::Bracket: return bracket(eval(e->kids()[0], env), eval(e->kids()[1], env));
    case CSExpr::Op::Act: return act(eval(e->kids()[0], env), eval(e->kids()[1], env));
    case CSExpr::Op::Alpha: return alpha_push(eval(e->kids()[0], env));
    case CSExpr::Op::Pair: {
      std::vector<PolyForm> slots;
      for (size_t i = 0; i + 1 < e->kids().size(); ++i) slots.push_back(eval(e->kids()[i], env));
      PolyForm h = eval(e->kids().back(), env);
      return pair_forms(*env.pairing, slots, h);
    }
  }
  throw Error(ErrorKind::Structural, "unreachable");
}

PolyForm eval_lt(const CSExprPtr& e, const GeneratorEnv& env) {
  auto zero_like = [&](const CSExprPtr& ex) {
    if (ex->vkind() == VKind::Scalar)
      return PolyForm::scalar_zero(env.A.patch_dim(), ex->degree() - 1);
    return PolyForm::zero(env.A.patch_dim(), ex->degree() - 1, ex->vkind(), env.xm);
  };
  switch (e->op()) {
    case CSExpr::Op::GenA:
    case CSExpr::Op::GenB:
      return zero_like(e);
    case CSExpr::Op::GenF: return env.Theta;
    case CSExpr::Op::GenG: return env.Phi;
    case CSExpr::Op::Sum: {
      PolyForm acc = eval_lt(e->kids()[0], env);
      for (size_t i = 1; i < e->kids().size(); ++i) acc = acc + eval_lt(e->kids()[i], env);
      return acc;
    }
    case CSExpr::Op::Scale: return eval_lt(e->kids()[0], env).scaled(e->weight());
    case CSExpr::Op::Bracket: {
      const auto& a = e->kids()[0];
      const auto& b = e->kids()[1];
      PolyForm r = bracket(eval_lt(a, env), eval(b, env));
      PolyForm second = bracket(eval(a, env), eval_lt(b, env));
      return (a->degree() % 2) ? r - second : r + second;
    }
    case CSExpr::Op::Act: {
      const auto& a = e->kids()[0];
      const auto& b = e->kids()[1];
      PolyForm r = act(eval_lt(a, env), eval(b, env));
      PolyForm second = act(eval(a, env), eval_lt(b, env));
      return (a->degree() % 2) ? r - second : r + second;
    }
    case CSExpr::Op::Alpha: return alpha_push(eval_lt(e->kids()[0], env));
    case CSExpr::Op::Pair: {
      size_t n = e->kids().size() - 1;
      std::vector<PolyForm> vals;
      for (size_t i = 0; i <= n; ++i) vals.push_back(eval(e->kids()[i], env));
      PolyForm acc = PolyForm::scalar_zero(env.A.patch_dim(), e->degree() - 1);
      int prefix = 0;
      for (size_t i = 0; i <= n; ++i) {
        PolyForm lt_i = eval_lt(e->kids()[i], env);
        if (!lt_i.is_zero()) {
          std::vector<PolyForm> slots;
          for (size_t j = 0; j < n; ++j) slots.push_back(j == i ? lt_i : vals[j]);
          PolyForm term = (i == n) ? pair_forms(*env.pairing, std::vector<PolyForm>(vals.begin(), vals.begin() + n), lt_i)
                                   : pair_forms(*env.pairing, slots, vals[n]);
          acc = (prefix % 2) ? acc - term : acc + term;
        }
        prefix += e->kids()[i]->degree();
      }
      return acc;
    }
  }
  throw Error(ErrorKind::Structural, "unreachable");
}

CSExprPtr symbolic_d(const CSExprPtr& e) {
  using E = CSExpr;
  auto half = Poly::constant(Rat(1, 2));
  switch (e->op()) {
    case E::Op::GenA:
      // dA = F - (1/2)[A,A] + alpha(B)
      return E::sum({E::genF(), E::scale(-half, E::bracket(E::genA(), E::genA())),
                     E::alpha(E::genB())});
    case E::Op::GenB:
      // dB = G - A |> B
      return E::sum({E::genG(), E::scale(Poly::constant(Rat(-1)), E::act(E::genA(), E::genB()))});
    case E::Op::GenF:
      // dF = [F, A] - alpha(G)
      return E::sum({E::bracket(E::genF(), E::genA()),
                     E::scale(Poly::constant(Rat(-1)), E::alpha(E::genG()))});
    case E::Op::GenG:
      // dG = F |> B - A |> G
      return E::sum({E::act(E::genF(), E::genB()),
                     E::scale(Poly::constant(Rat(-1)), E::act(E::genA(), E::genG()))});
    case E::Op::Sum: {
      std::vector<CSExprPtr> kids;
      for (const auto& k : e->kids()) kids.push_back(symbolic_d(k));
      return E::sum(std::move(kids));
    }
    case E::Op::Scale: return E::scale(e->weight(), symbolic_d(e->kids()[0]));
    case E::Op::Bracket: {
      const auto& a = e->kids()[0];
      const auto& b = e->kids()[1];
      auto first = E::bracket(symbolic_d(a), b);
      auto second = E::bracket(a, symbolic_d(b));
      if (a->degree() % 2) second = E::scale(Poly::constant(Rat(-1)), second);
      return E::sum({first, second});
    }
    case E::Op::Act: {
      const auto& a = e->kids()[0];
      const auto& b = e->kids()[1];
      auto first = E::act(symbolic_d(a), b);
      auto second = E::act(a, symbolic_d(b));
      if (a->degree() % 2) second = E::scale(Poly::constant(Rat(-1)), second);
      return E::sum({first, second});
    }
    case E::Op::Alpha: return E::alpha(symbolic_d(e->kids()[0]));
    case E::Op::Pair: {
      size_t n = e->kids().size() - 1;
      std::vector<CSExprPtr> terms;
      int prefix = 0;
      for (size_t i = 0; i <= n; ++i) {
        std::vector<CSExprPtr> slots(e->kids().begin(), e->kids().end() - 1);
        CSExprPtr term;
        if (i == n) term = E::pair(slots, symbolic_d(e->kids()[n]));
        else {
          slots[i] = symbolic_d(e->kids()[i]);
          term = E::pair(slots, e->kids()[n]);
        }
        if (prefix % 2) term = E::scale(Poly::constant(Rat(-1)), term);
        terms.push_back(term);
        prefix += e->kids()[i]->degree();
      }
      return E::sum(std::move(terms));
    }
  }
  throw Error(ErrorKind::Structural, "unreachable");
}

PolyForm k01(const CSExprPtr& e, const GeneratorEnv& env) {
  return integrate_param(eval_lt(e, env), Poly::kT);
}

CSExprPtr cs_integrand(int n) {
  using E = CSExpr;
  Poly s = Poly::param_s();
  Poly s2s = s * s - s;
  auto Fs = E::sum({E::scale(s, E::genF()),
                    E::scale(s2s * Poly::constant(Rat(1, 2)), E::bracket(E::genA(), E::genA()))});
  auto Gs = E::sum({E::scale(s, E::genG()), E::scale(s2s, E::act(E::genA(), E::genB()))});
  std::vector<CSExprPtr> first_slots{E::genA()};
  for (int i = 0; i < n - 1; ++i) first_slots.push_back(Fs);
  auto first = E::scale(Poly::constant(Rat(n)), E::pair(first_slots, Gs));
  std::vector<CSExprPtr> second_slots(n, Fs);
  auto second = E::pair(second_slots, E::genB());
  return E::sum({first, second});
}

CSExprPtr curvature_polynomial(int n) {
  using E = CSExpr;
  std::vector<CSExprPtr> slots(n, E::genF());
  return E::pair(slots, E::genG());
}

}  // namespace higauge
