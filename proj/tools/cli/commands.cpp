#include "commands.hpp"

#include "render.hpp"

#include <hopfkit/analysis.hpp>
#include <hopfkit/constructions.hpp>
#include <hopfkit/hopf_ops.hpp>
#include <hopfkit/io.hpp>
#include <hopfkit/quotients.hpp>

#include <fstream>
#include <iostream>

namespace hopfkit::cli {

namespace {

/// A mathematical rejection of otherwise well-formed input.
class Rejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_vec(const FiniteDimHopf& h, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    s += (s.empty() ? "" : " + ") + (v[i].is_one() ? std::string() : c + "*") + h.labels()[i];
  }
  return s.empty() ? "0" : s;
}

Doc checks_doc(const AxiomReport& r) {
  Doc arr = Doc::array();
  for (const AxiomCheck& c : r.checks) {
    Doc e;
    e["name"] = c.name;
    e["holds"] = c.holds;
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return arr;
}

struct Loaded {
  AlgebraFile file;
  AxiomReport axioms;
};

Loaded load_verified(const std::filesystem::path& path) {
  Loaded l{load_algebra(path), {}};
  l.axioms = verify_hopf_axioms(*l.file.hopf);
  if (const AxiomCheck* f = l.axioms.first_failure()) throw Rejected("Hopf axiom '" + f->name + "' fails");
  return l;
}

QTPair load_qt(const Loaded& l) {
  if (!l.file.r) throw Rejected("the algebra file carries no R-matrix");
  QtVerification v = verify_qt(l.file.hopf, *l.file.r);
  if (!v.ok()) throw Rejected("R-matrix rejected: '" + v.report.first_failure()->name + "' fails");
  return std::move(*v.pair);
}

CommandResult finish(const Doc& doc, Format format, int code = kExitOk, std::string error = {}) {
  return CommandResult{code, render(doc, format == Format::Json), std::move(error)};
}

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return CommandResult{kExitInput, {}, std::string("error: ") + e.what()};
  } catch (const std::filesystem::filesystem_error& e) {
    return CommandResult{kExitInput, {}, std::string("error: ") + e.what()};
  } catch (const Rejected& e) {
    return CommandResult{kExitRejected, {}, std::string("rejected: ") + e.what()};
  } catch (const StructureError& e) {
    return CommandResult{kExitRejected, {}, std::string("rejected: ") + e.what()};
  } catch (const QtError& e) {
    return CommandResult{kExitRejected, {}, std::string("rejected: ") + e.what()};
  } catch (const ArithmeticError& e) {
    return CommandResult{kExitRejected, {}, std::string("arithmetic error: ") + e.what()};
  } catch (const std::exception& e) {
    return CommandResult{kExitRejected, {}, std::string("internal error: ") + e.what()};
  }
}

Doc header(const char* command, const FiniteDimHopf& h) {
  Doc d;
  d["command"] = command;
  d["algebra"] = h.name();
  d["dim"] = h.dim();
  return d;
}

Doc character_section(const QTPair& qt, const CharacterSet& cs) {
  Doc d;
  d["status"] = "available";
  d["provenance"] = provenance_name(cs.provenance);
  d["degrees"] = cs.degrees;
  const SMatrix s = s_matrix(qt, cs);
  Doc rows = Doc::array();
  for (const auto& row : s.entries) {
    Doc r = Doc::array();
    for (const CycloScalar& x : row) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  d["s_matrix"] = std::move(rows);
  d["symmetric"] = s.symmetric;
  d["nondegenerate"] = s.nondegenerate;
  d["nondegenerate iff factorizable"] = s.matches_factorizable;
  const TransparencyReport t = transparent_characters(qt, cs);
  d["transparent"] = t.transparent;
  d["transparent span dim"] = t.transparent_span.dim();
  d["span equals pulled-back quotient characters"] = t.matches;
  return d;
}

Subspace coalgebra_from_choice(const QTPair& qt, const std::string& choice) {
  const std::size_t n = qt.algebra().dim();
  if (choice == "full") return Subspace::whole(n);
  if (choice == "grouplikes") return Subspace::span(n, group_likes(*dual(qt.algebra())).elements);
  return Subspace::span(n, load_vectors(choice, n));
}

Doc grouplike_images(const QTPair& qt) {
  const FiniteDimHopf& h = qt.algebra();
  const Subspace z = center(h);
  const GroupLikes gl = group_likes(*dual(h));
  Doc arr = Doc::array();
  for (std::size_t i = 0; i < gl.order(); ++i) {
    const Vec img = qt.phi() * gl.elements[i];
    Doc e;
    e["index"] = i;
    e["image"] = format_vec(h, img);
    e["group-like"] = h.comultiply(img) == TensorElement::outer(img, img) && h.epsilon(img).is_one();
    e["central"] = z.contains(img);
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

CommandResult cmd_verify(const std::filesystem::path& algebra, Format format) {
  return guarded([&] {
    const AlgebraFile file = load_algebra(algebra);
    const AxiomReport axioms = verify_hopf_axioms(*file.hopf);
    Doc doc = header("verify", *file.hopf);
    doc["hopf_axioms"] = checks_doc(axioms);
    std::string failure;
    if (const AxiomCheck* f = axioms.first_failure()) failure = "Hopf axiom '" + f->name + "' fails";
    if (!file.r) {
      doc["r_matrix"] = "absent";
    } else if (!axioms.ok()) {
      doc["r_matrix"] = "not checked";
    } else {
      const QtVerification v = verify_qt(file.hopf, *file.r);
      doc["r_matrix"] = checks_doc(v.report);
      if (!v.ok()) failure = "R-matrix axiom '" + v.report.first_failure()->name + "' fails";
    }
    doc["verdict"] = failure.empty() ? "pass" : "fail";
    return finish(doc, format, failure.empty() ? kExitOk : kExitRejected, failure);
  });
}

CommandResult cmd_analyze(const std::filesystem::path& algebra, const std::optional<std::filesystem::path>& characters,
                          Format format) {
  return guarded([&] {
    const Loaded l = load_verified(algebra);
    const QTPair qt = load_qt(l);
    const FiniteDimHopf& h = qt.algebra();
    Doc doc = header("analyze", h);
    doc["rank"] = qt.rank();
    doc["dim H+"] = qt.h_plus().dim();
    doc["dim H-"] = qt.h_minus().dim();
    doc["dim H_R"] = qt.h_r().dim();
    doc["dim Phi_R(H*)"] = qt.phi_image().dim();
    doc["triangular"] = qt.triangular();
    doc["factorizable"] = qt.factorizable();
    doc["minimal"] = qt.minimal();
    doc["semisimple"] = is_semisimple(h);

    const DrinfeldElement& u = qt.drinfeld();
    Doc de;
    de["u"] = format_vec(h, u.u);
    de["invertible"] = u.invertible;
    de["group-like"] = u.group_like;
    de["central"] = u.central;
    de["implements S^2"] = u.implements_s_squared;
    doc["drinfeld element"] = std::move(de);

    const SimpleCorollaryReport sc = simple_corollary_check(qt);
    Doc gl;
    gl["|G(H*)|"] = sc.group_likes;
    gl["kernel of f_R on G(H*)"] = sc.kernel_size;
    gl["injective"] = sc.injective;
    gl["|G(H*)| divides rank"] = sc.order_divides_rank;
    gl["kernel spans a normal Hopf subalgebra"] = sc.kernel_normal;
    doc["group-likes of H*"] = std::move(gl);

    std::optional<CharacterSet> cs;
    std::string reason;
    if (characters) {
      cs = user_characters(qt.hopf(), load_vectors(*characters, h.dim()));
    } else {
      try {
        cs = hopfkit::characters(qt.hopf(), l.file.hint);
      } catch (const CharactersUnavailable& e) {
        reason = e.what();
      }
    }
    if (cs) {
      doc["characters"] = character_section(qt, *cs);
    } else {
      Doc d;
      d["status"] = "unavailable";
      d["reason"] = reason;
      doc["characters"] = std::move(d);
    }
    return finish(doc, format);
  });
}

CommandResult cmd_quotient(const std::filesystem::path& algebra, const std::string& coalgebra, Format format,
                           const std::optional<std::filesystem::path>& export_quotient,
                           const std::optional<std::filesystem::path>& export_morphism) {
  return guarded([&] {
    const Loaded l = load_verified(algebra);
    const QTPair qt = load_qt(l);
    const FiniteDimHopf& h = qt.algebra();
    const Subspace c = coalgebra_from_choice(qt, coalgebra);
    const CanonicalQuotient cq = canonical_quotient(qt, c);
    const QuotientPresentation& p = cq.presentation;

    Doc doc = header("quotient", h);
    doc["coalgebra"] = coalgebra == "full" || coalgebra == "grouplikes" ? coalgebra : std::string("file");
    doc["dim C"] = c.dim();
    doc["dim Phi_R(C)"] = cq.phi_c.dim();
    doc["dim K_C"] = cq.k.dim();
    doc["dim H_bar_C"] = p.quotient->dim();
    doc["quotient triangular"] = cq.quotient_qt.triangular();
    doc["checks"] = checks_doc(cq.checks);

    const NormalityReport nr = normality_criteria(qt, p.projection);
    Doc norm;
    norm["normal"] = nr.evidence.normal;
    norm["canonical"] = nr.canonical;
    Doc fired = Doc::array();
    Doc conds = Doc::array();
    for (const NamedFlag& f : nr.conditions) {
      if (f.value) fired.push_back(f.name);
      Doc e;
      e["name"] = f.name;
      e["holds"] = f.value;
      conds.push_back(std::move(e));
    }
    norm["criteria holding"] = std::move(fired);
    norm["conditions"] = std::move(conds);
    norm["implications"] = checks_doc(nr.implications);
    doc["normality"] = std::move(norm);

    AxiomReport all = cq.checks;
    for (const AxiomCheck& ch : nr.implications.checks) all.checks.push_back(ch);
    if (coalgebra != "full") doc["group-like images"] = grouplike_images(qt);
    if (c.dim() == h.dim()) {
      const AxiomReport gl = central_gl_report(qt, cq);
      doc["central group-likes"] = checks_doc(gl);
      for (const AxiomCheck& ch : gl.checks) all.checks.push_back(ch);
    }

    Doc exported = Doc::array();
    if (export_quotient) {
      save_algebra(*export_quotient, *p.quotient, p.pushed_r);
      exported.push_back(export_quotient->string());
    }
    if (export_morphism) {
      write_text_file(*export_morphism, dump_morphism(p.projection));
      exported.push_back(export_morphism->string());
    }
    if (!exported.empty()) doc["exported"] = std::move(exported);

    const AxiomCheck* f = all.first_failure();
    return finish(doc, format, f ? kExitRejected : kExitOk, f ? "check '" + f->name + "' fails" : std::string());
  });
}

CommandResult cmd_enumerate_group(const std::string& group, Format format) {
  return guarded([&] {
    FiniteGroup g = [&] {
      if (std::filesystem::exists(group)) return load_group(group);
      try {
        return FiniteGroup::builtin(group);
      } catch (const StructureError&) {
        throw ParseError("'" + group + "' is neither a group file nor a builtin group");
      }
    }();
    if (g.order() > kMaxEnumeratedGroupOrder) {
      throw Rejected("group order " + std::to_string(g.order()) + " exceeds the enumeration cap of " +
                     std::to_string(kMaxEnumeratedGroupOrder));
    }
    const std::vector<GroupQtStructure> rows = enumerate_qt_group(g);
    Doc doc;
    doc["command"] = "enumerate-group";
    doc["group"] = g.name();
    doc["order"] = g.order();
    doc["count"] = rows.size();
    Doc arr = Doc::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const GroupQtStructure& s = rows[i];
      Doc e;
      e["index"] = i;
      Doc gamma = Doc::array();
      for (std::size_t x : s.rho.chars.subgroup) gamma.push_back(g.labels()[x]);
      e["Gamma"] = std::move(gamma);
      e["root order"] = s.rho.chars.exponent;
      e["rho exponents"] = s.rho.exponents;
      e["trivial"] = s.rho.is_trivial();
      e["rank"] = s.pair.rank();
      e["triangular"] = s.pair.triangular();
      e["factorizable"] = s.pair.factorizable();
      e["minimal"] = s.pair.minimal();
      arr.push_back(std::move(e));
    }
    doc["rows"] = std::move(arr);
    return finish(doc, format);
  });
}

CommandResult cmd_double(const std::filesystem::path& algebra, const std::optional<std::filesystem::path>& out,
                         Format format) {
  return guarded([&] {
    const Loaded l = load_verified(algebra);
    const QTPair d = drinfeld_double(*l.file.hopf);
    CharacterHint hint;
    if (l.file.hint.kind == CharacterHint::Kind::GroupAlgebra) hint = {CharacterHint::Kind::Double, l.file.hint.group};
    const std::string text = dump_algebra(d.algebra(), d.r(), hint);
    if (!out) return CommandResult{kExitOk, text, {}};
    write_text_file(*out, text);
    Doc doc = header("double", d.algebra());
    doc["source"] = l.file.hopf->name();
    doc["rank"] = d.rank();
    doc["factorizable"] = d.factorizable();
    doc["written"] = out->string();
    return finish(doc, format);
  });
}

CommandResult cmd_report(const std::filesystem::path& algebra, Format format) {
  return guarded([&] {
    const Loaded l = load_verified(algebra);
    const QTPair qt = load_qt(l);
    const ClassificationReport rep = classification_report(qt);
    Doc doc = header("report", qt.algebra());
    Doc items = Doc::array();
    for (const ReportItem& i : rep.items) {
      Doc e;
      e["item"] = i.name;
      e["status"] = status_name(i.status);
      e["detail"] = i.detail;
      items.push_back(std::move(e));
    }
    doc["items"] = std::move(items);
    const SimpleCorollaryReport sc = simple_corollary_check(qt);
    Doc s;
    s["|G(H*)|"] = sc.group_likes;
    s["kernel of f_R on G(H*)"] = sc.kernel_size;
    s["consistent"] = sc.consistent;
    doc["group-likes of H*"] = std::move(s);
    return finish(doc, format);
  });
}

int emit(const CommandResult& result, const Sink& sink) {
  int code = result.exit_code;
  if (!result.output.empty()) {
    if (sink.out) {
      std::ofstream f(*sink.out, std::ios::binary);
      if (!(f << result.output)) {
        std::cerr << "error: cannot write " << sink.out->string() << "\n";
        return kExitInput;
      }
    } else {
      std::cout << result.output;
    }
  }
  if (!result.error.empty()) std::cerr << result.error << "\n";
  return code;
}

}  // namespace hopfkit::cli
