from sl2forms.info import __version__
