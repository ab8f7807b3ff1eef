// Generated by tests/oracles/generate_oracles.py -- do not edit.
#pragma once
#include <array>

namespace qpax::oracle {

struct BesselRow { double x, j0, j1, y0, y1; };
inline constexpr std::array<BesselRow, 21> kBessel{{
    {1.0e-8, 0.999999999999999975, 4.9999999999999999375e-9, -11.800773877179530768, -6.3661977236758194903e+7},
    {1.0e-6, 0.99999999999975, 4.999999999999375e-7, -8.8690314816594437029, -6.3661977237217501376e+5},
    {0.001, 0.999999750000015625, 0.00049999993750000260417, -4.471416611375923269, -636.62216723113942807},
    {0.01, 0.99997500015624956597, 0.0049999375002604161241, -3.0054556370836459578, -63.678596282060656374},
    {0.1, 0.99750156206604003228, 0.049937526036241997556, -1.5342386513503668441, -6.4589510947020269877},
    {0.5, 0.93846980724081290423, 0.24226845767487388638, -0.44451873350670655715, -1.4714723926702430692},
    {1.0, 0.76519768655796655145, 0.44005058574493351596, 0.088256964215676957983, -0.78121282130028871655},
    {2.0, 0.22389077914123566805, 0.5767248077568733872, 0.5103756726497451196, -0.10703243154093754689},
    {3.7, -0.39923020337119110577, 0.053833987745461864015, 0.10607431532035418428, 0.41667437268380749445},
    {5.0, -0.17759677131433830435, -0.32757913759146522204, -0.30851762524903378007, 0.1478631433912268448},
    {7.5, 0.26633965788037839687, 0.13524842757970550518, 0.11731328614820863084, -0.2591285104861162518},
    {10.0, -0.2459357644513483352, 0.04347274616886143667, 0.055671167283599391424, 0.24901542420695388392},
    {12.0, 0.047689310796833536624, -0.22344710449062761237, -0.22523731263436143369, -0.05709921826089652105},
    {14.0, 0.17107347611045865906, 0.13337515469879325311, 0.12719256858218368838, -0.16664484185617226675},
    {16.5, -0.19638069293686102974, -0.0057642137356312269888, 0.0001812324575409665639, 0.19647583778590965623},
    {17.5, -0.10311039822868592217, -0.16341996942575490589, -0.16041119250501116909, 0.098572798734216046215},
    {20.0, 0.16702466434058315473, 0.066833124175850045579, 0.062640596809383831162, -0.16551161436252129586},
    {25.0, 0.096266783275958116174, -0.12535024958028990465, -0.12724943226800613783, -0.098829964783237410053},
    {30.0, -0.086367983581040211336, -0.11875106261662293652, -0.11729573168666402525, 0.084425570661747234891},
    {37.3, 0.048811957363260090704, -0.12053182002408673868, -0.12117514374425353216, -0.050440378439893855425},
    {50.0, 0.055812327669251815005, -0.097511828125175137661, -0.098064995470077079029, -0.056795668562014767942},
}};

struct PsiRow { double z, k, re, im; };
inline constexpr std::array<PsiRow, 6> kPsi{{
    {1, 2, 1.2271262301435714892, 0.69122984369208426288},
    {0.005, 2, 1.0000076990905891029, 1.9634892725768608148e-5},
    {0.3, 2, 1.0270287921517716622, 0.06989359553890767408},
    {5, 2, -3.7974058293472847178, -2.5728005303165680437},
    {1, 0.7, 1.6891010709572051241, 0.69122984369208426288},
    {0.02, 2, 1.0001231726441136227, 0.00031414355765750858103},
}};

inline constexpr double kFirstJ0Zero = 2.4048255576957727686;

struct MathieuCharRow { int order; double q, a, b; };
inline constexpr std::array<MathieuCharRow, 21> kMathieuChar{{
    {0, 0.25, -0.03103939547561732, 0.0},
    {1, 0.25, 1.2419411282429151, 0.7424288259866297},
    {2, 0.25, 4.025829084645603, 3.994793078632119},
    {3, 0.25, 9.004152551546934, 9.00366486704624},
    {4, 0.25, 16.002085290467196, 16.00208190103817},
    {5, 0.25, 25.0013021454698, 25.001302132226844},
    {6, 0.25, 36.00089287379843, 36.00089287376532},
    {0, 0.75, -0.26587803386225783, 0.0},
    {1, 0.75, 1.6729757857489118, 0.18601632140343938},
    {2, 0.75, 4.218843182034352, 3.9532387995841005},
    {3, 0.75, 9.041861200197145, 9.028823877818395},
    {4, 0.75, 16.018908190935697, 16.018634563641886},
    {5, 0.75, 25.011724859883273, 25.011721646733157},
    {6, 0.75, 36.00803707485708, 36.00803705073936},
    {0, 1.0, -0.45513860410741364, 0.0},
    {1, 1.0, 1.8591080725143634, -0.11024881699209521},
    {2, 1.0, 4.371300982735086, 3.917024772998471},
    {3, 1.0, 9.078368847203102, 9.047739259809374},
    {4, 1.0, 16.033832340359513, 16.032970081405793},
    {5, 1.0, 25.020854345448583, 25.020840823289767},
    {6, 1.0, 36.0142900460405, 36.01428991062822},
}};

}  // namespace qpax::oracle
