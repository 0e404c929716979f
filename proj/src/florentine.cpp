#include "lapcen/graph.hpp"

namespace lapcen {

namespace {

// Padgett & Ansell marriage ties among Florentine families (c. 1430).
constexpr std::string_view kFlorentineEdges = R"(# Florentine families, marriage network
Acciaiuoli Medici
Medici Barbadori
Medici Ridolfi
Medici Tornabuoni
Medici Albizzi
Medici Salviati
Castellani Peruzzi
Castellani Strozzi
Castellani Barbadori
Peruzzi Strozzi
Peruzzi Bischeri
Strozzi Ridolfi
Strozzi Bischeri
Ridolfi Tornabuoni
Tornabuoni Guadagni
Albizzi Ginori
Albizzi Guadagni
Salviati Pazzi
Bischeri Guadagni
Guadagni Lamberteschi
# no marriage ties recorded
Pucci
)";

}  // namespace

Graph florentine() { return parse_edge_list(kFlorentineEdges); }

}  // namespace lapcen
