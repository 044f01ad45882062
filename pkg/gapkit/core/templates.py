from typing import List
from .GridManifest import GridManifest, GridParameter
from .SubsetScheme import SubsetScheme

# Archangel synthetic pool rendering parameters
ALTITUDES   = list(range(5, 55, 5))         # m, 10 values
RADII       = list(range(5, 35, 5))         # m, 6 values
ANGLES      = list(range(0, 360, 30))       # deg, 12 values
CHARACTERS  = ['Juliet', 'Kelly', 'Lucy', 'Mary', 'Romeo', 'Scott', 'Troy', 'Victor']
POSES       = ['stand', 'prone', 'squat']

ARCHANGEL_ID_TEMPLATE = "{character}_{pose}_alt{altitude}_rad{radius}_ang{angle}"


def archangel_parameters(cyclic_angles: bool = False) -> List[GridParameter]:
    return [
        GridParameter('altitude', ALTITUDES),
        GridParameter('radius', RADII),
        GridParameter('angle', ANGLES, cyclic=cyclic_angles),
        GridParameter('character', CHARACTERS),
        GridParameter('pose', POSES),
    ]


def archangel_grid(cyclic_angles: bool = False, template: str = ARCHANGEL_ID_TEMPLATE) -> GridManifest:
    return GridManifest.from_template(archangel_parameters(cyclic_angles), template)


def builtin_schemes() -> List[SubsetScheme]:
    return [
        SubsetScheme('SAlt',  {'altitude': [10, 20, 30, 40, 50]}),
        SubsetScheme('SRad',  {'radius': [10, 20, 30]}),
        SubsetScheme('SAng',  {'angle': [0, 60, 120, 180, 240, 300]}),
        SubsetScheme('SCha',  {'character': ['Juliet', 'Kelly', 'Romeo', 'Scott']}),
        SubsetScheme('SPos',  {'pose': ['stand']}),
        SubsetScheme('BSAlt', {'altitude': [30, 35, 40, 45, 50]}),
        SubsetScheme('BSRad', {'radius': [20, 25, 30]}),
        SubsetScheme('BSAng', {'angle': [300, 330, 0, 30, 60]}),
    ]
