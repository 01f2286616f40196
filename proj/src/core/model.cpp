#include "core/model.hpp"

namespace su3t {

namespace {

KForm<Rat> term(int i, int j) { return KForm<Rat>::basis(static_cast<Mask>((1u << (i - 1)) | (1u << (j - 1)))); }
KForm<Rat> term(int i, int j, int k) {
  return KForm<Rat>::basis(static_cast<Mask>((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1))));
}

}  // namespace

KForm<Rat> omega0_exact() {
  static const KForm<Rat> f = term(1, 4) + term(2, 5) + term(3, 6);
  return f;
}

KForm<Rat> re_upsilon0_exact() {
  static const KForm<Rat> f = term(1, 2, 3) - term(1, 5, 6) + term(2, 4, 6) - term(3, 4, 5);
  return f;
}

KForm<Rat> im_upsilon0_exact() {
  static const KForm<Rat> f = term(1, 2, 6) - term(1, 3, 5) + term(2, 3, 4) - term(4, 5, 6);
  return f;
}

KForm<Rat> vol0_exact() {
  static const KForm<Rat> f = Rat(1, 6) * wedge(wedge(omega0_exact(), omega0_exact()), omega0_exact());
  return f;
}

}  // namespace su3t
