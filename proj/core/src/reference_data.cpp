#include "simrank/dataset.hpp"

namespace simrank {

// Player table, 2017/18 league season through January 31, 2018
// (source: WhoScored). Kept byte-identical to data/reference_players.csv.
namespace {
constexpr std::string_view kReferenceCsv =
    "Player,Games,Goals,Assists,SpG,PS%,AerW,Dribbling,Fouled,Offside,Disp,UnschTch,KeyP,AvPasses,Crosses,LongB,ThruB,Tackles,Fouls,Goals pg,As pg\n"
    "Messi,21,20,9,6.1,80.3,0.1,5.8,2.5,0.4,3.4,1.7,2.7,55.9,0.3,2.3,0.5,0.4,0.4,0.95,0.43\n"
    "Neymar,16,17,11,4.3,79,0.2,7.6,5.1,0.6,3,3.3,3.6,65.8,1.1,1.9,1.2,1.1,1.2,1.06,0.69\n"
    "N. Fekir,20,16,6,3.2,83.2,0.9,3.5,4.2,0.6,2.9,2.6,2.3,40.4,1.6,0.9,0.2,1.7,2.9,0.80,0.30\n"
    "Coutinho,14,7,6,3.9,78.8,0.1,2.8,1.5,0.3,1.9,1.4,2.9,49.3,1.4,2.7,0.4,1.2,0.4,0.50,0.43\n"
    "De Bruyne,24,6,10,2.6,83.1,0.6,1.7,0.8,0,1.5,2,3,72.8,1.8,3.5,0.3,1.9,0.8,0.25,0.42\n"
    "L. Suarez,18,16,4,3.9,76.1,0.2,1.1,1.7,2.1,1.4,2.3,1.2,31.4,0.1,1.2,0.2,0.6,1.5,0.89,0.22\n"
    "Thauvin,23,10,9,3.6,78,0.4,3.4,1.3,0.4,2.9,2.3,2.5,45.7,1.3,1.7,0.3,1.3,0.8,0.43,0.39\n"
    "Mertens,22,13,6,3.8,75.4,0.1,1.4,1.1,0.3,1.9,1.8,1.6,26.2,0.2,0.6,0.3,1,1.4,0.59,0.27\n"
    "Kane,23,21,1,5.8,73.3,1.2,1.5,1,1.2,1.5,1.7,1,18.7,0,1.9,0.1,0.5,1,0.91,0.04\n"
    "Cavani,22,21,4,3.4,79.8,0.3,0.6,0.6,0.6,0.5,1.1,1.2,16.6,0,0.5,0.1,0.6,0.5,0.95,0.18\n"
    "Aguero,19,16,5,4,82.7,0.4,2.2,0.6,0.7,1.8,2.5,1.5,25.8,0.3,0.2,0.2,0.4,0.5,0.84,0.26\n"
    "Dybala,19,14,3,3.9,85.4,0.3,2.4,2,0,2.2,2,1.6,37.7,0.7,2.3,0,0.7,0.6,0.74,0.16\n"
    "Mbappe,17,9,3,2.8,83.5,0.4,3.1,1.2,0.6,2.5,2.6,2,28.5,0.5,0.4,0.2,0.6,0.4,0.53,0.18\n"
    "Hazard,21,8,2,2.3,82.8,0.1,5,2.5,0.5,2,1.5,2.2,39.1,0.4,2.8,0,0.1,0.3,0.38,0.10\n"
    "Sterling,23,14,6,2.4,84,0.2,2,1.9,0.5,2,1.8,1.6,36.2,0.2,0.3,0.2,0.7,1.1,0.61,0.26\n"
    "D. Silva,21,5,8,1.9,88.6,0.7,1.4,1.4,0.1,0.9,1,2,82.6,0.6,1.3,0.1,1.2,0.8,0.24,0.38\n"
    "Salah,24,19,6,4,77.4,0.4,2.4,0.7,0.5,2.4,2.9,1.7,27.3,0.6,0.5,0.1,0.1,0.5,0.79,0.25\n"
    "Mahrez,24,8,7,2,79.4,0.8,2.2,1.5,0.3,1.8,2.6,1.5,33.3,0.8,2.5,0.2,1,0.8,0.33,0.29\n"
    "L. Alberto,22,7,7,2.1,80,0.5,2.1,1.2,0.1,1.9,1.4,2.5,46.2,1.9,2.7,0.4,1,0.6,0.32,0.32\n"
    "Immobile,19,20,7,3.7,79.4,0.5,0.9,1.2,1.1,1.8,2.1,1.3,23.2,0.1,0.7,0,0.1,0.8,1.05,0.37\n"
    "Firmino,24,11,5,2.3,72.4,1,1.3,0.4,0.3,2.1,2.1,1.7,30.5,0.2,0.3,0.1,1.5,1.5,0.46,0.21\n"
    "Lukaku,24,11,5,2.8,67.8,3.2,1.1,0.5,0.5,1.5,2.3,1,21.6,0.2,0.7,0.1,0.2,1,0.46,0.21\n"
    "Aspas,20,14,4,2.8,78.8,0.4,2,1.9,0.3,1.7,2.4,2,40,0.4,1.4,0.1,0.9,0.8,0.70,0.20\n"
    "C. Ronaldo,16,8,3,6.8,81.3,1.8,0.9,0.9,1.4,0.9,1.6,1.5,28.1,0.3,0.4,0.1,0.3,0.9,0.50,0.19\n"
    "Mariano,22,13,3,3,72.9,1.5,0.8,0.5,0.8,1.5,2,0.7,15,0,0.1,0.1,0.6,1.2,0.59,0.14\n"
    "A. Sanchez,19,7,3,3.6,72.4,0.8,2.1,2.3,0.8,2.5,3.4,2.7,45.9,0.5,2.6,0.4,1.1,1.1,0.37,0.16\n"
    "Griezmann,18,7,5,2.5,79.5,0.9,0.7,1.7,1.1,1,1.7,1.7,30.9,0.2,1.2,0.3,1.2,0.7,0.39,0.28\n"
    "Di Maria,17,6,5,2.9,80.4,0,0.9,0.7,0.5,0.9,0.9,1.6,37.8,0.8,1.6,0.3,0.3,0.4,0.35,0.29\n"
    "Aubameyang,16,13,3,3.6,76.3,1.6,0.3,0.5,0.9,0.8,1.6,1,19.8,0.3,0.2,0,0.3,1.1,0.81,0.19\n";
}  // namespace

std::string_view reference_csv() noexcept { return kReferenceCsv; }

}  // namespace simrank
